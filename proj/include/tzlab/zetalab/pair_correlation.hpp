#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "tzlab/core/error.hpp"
#include "tzlab/core/numeric.hpp"

namespace tzlab::zetalab {

/// GUE two-point density 1 - (sin(pi u) / (pi u))^2.
inline double gue_pair_density(double u) {
    const double x = std::numbers::pi * u;
    if (std::abs(x) < 1e-4) return x * x / 3.0;  // series: x^2/3 - 2x^4/45
    const double sinc = std::sin(x) / x;
    return 1.0 - sinc * sinc;
}

struct PairCorrelation {
    std::vector<double> bin_edges;  ///< bins + 1 edges on [0, max_sep]
    std::vector<double> empirical;  ///< pairs per unit separation per point
    std::vector<double> reference;  ///< bin average of the GUE density
    double ks_distance = 0.0;
    std::size_t pair_count = 0;     ///< pairs with 0 < separation <= max_sep
    std::size_t point_count = 0;

    std::vector<double> bin_centers() const {
        std::vector<double> c;
        for (std::size_t b = 0; b + 1 < bin_edges.size(); ++b) c.push_back(0.5 * (bin_edges[b] + bin_edges[b + 1]));
        return c;
    }
};

/// Histogram of forward differences x_j - x_i (i < j within one sequence)
/// in (0, max_sep], normalized per unit length per point, against the GUE
/// reference. The KS distance compares the two cumulative curves over
/// (0, max_sep], each normalized to its own total.
///
/// Each inner sequence must be sorted ascending; pairs never cross sequences.
inline PairCorrelation pair_correlation(std::span<const std::vector<double>> sequences, double max_sep,
                                        std::size_t bins) {
    if (!(max_sep > 0.0)) throw DomainError("pair_correlation: max_sep must be positive");
    if (bins < 1) throw DomainError("pair_correlation: need at least one bin");
    std::size_t points = 0;
    for (const auto& seq : sequences) points += seq.size();
    if (points < 100) throw DomainError("pair_correlation: need at least 100 positions");

    PairCorrelation pc;
    pc.point_count = points;
    const double width = max_sep / static_cast<double>(bins);
    pc.bin_edges.resize(bins + 1);
    for (std::size_t b = 0; b <= bins; ++b) pc.bin_edges[b] = width * static_cast<double>(b);

    std::vector<std::size_t> counts(bins, 0);
    for (const auto& seq : sequences) {
        if (!std::is_sorted(seq.begin(), seq.end())) throw DomainError("pair_correlation: positions must be sorted");
        for (std::size_t i = 0; i < seq.size(); ++i) {
            for (std::size_t j = i + 1; j < seq.size(); ++j) {
                const double d = seq[j] - seq[i];
                if (d > max_sep) break;
                if (d <= 0.0) continue;
                const auto b = std::min(bins - 1, static_cast<std::size_t>(std::ceil(d / width)) - 1);
                ++counts[b];
                ++pc.pair_count;
            }
        }
    }

    pc.empirical.resize(bins);
    pc.reference.resize(bins);
    for (std::size_t b = 0; b < bins; ++b) {
        pc.empirical[b] = static_cast<double>(counts[b]) / (static_cast<double>(points) * width);
        const auto q = integrate(gue_pair_density, pc.bin_edges[b], pc.bin_edges[b + 1], 1e-12);
        pc.reference[b] = q.value / width;
    }

    double emp_total = 0.0;
    double ref_total = 0.0;
    for (std::size_t b = 0; b < bins; ++b) {
        emp_total += pc.empirical[b];
        ref_total += pc.reference[b];
    }
    double emp_cum = 0.0;
    double ref_cum = 0.0;
    for (std::size_t b = 0; b < bins; ++b) {
        emp_cum += pc.empirical[b];
        ref_cum += pc.reference[b];
        const double gap = emp_total > 0.0 ? std::abs(emp_cum / emp_total - ref_cum / ref_total) : 1.0;
        pc.ks_distance = std::max(pc.ks_distance, gap);
    }
    return pc;
}

inline PairCorrelation pair_correlation(std::span<const double> positions, double max_sep, std::size_t bins) {
    const std::vector<std::vector<double>> one{std::vector<double>(positions.begin(), positions.end())};
    return pair_correlation(one, max_sep, bins);
}

}  // namespace tzlab::zetalab
