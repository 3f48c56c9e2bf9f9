#pragma once

/**
 * @file universality.hpp
 * @brief Vertical-shift scans for Voronin universality and Bagchi
 * self-approximation.
 *
 * For each t on the scan grid the sup over a sampled disc K of
 * |zeta(s + it) - f(s)| is compared with epsilon. The fraction of accepted
 * grid steps estimates the lower density of approximating shifts.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "tzlab/core/error.hpp"
#include "tzlab/core/numeric.hpp"
#include "tzlab/zetalab/zeta.hpp"

namespace tzlab::zetalab {

struct Disc {
    cdouble center;
    double radius;
};

struct ScanSample {
    double t;
    double sup_error;
    bool hit;
};

struct UniversalityReport {
    Disc region;
    double epsilon = 0.0;
    double t_max = 0.0;
    double t_step = 0.0;
    double hit_measure = 0.0;      ///< hits * t_step / t_max
    std::vector<double> witnesses;  ///< accepted shifts t
    std::vector<ScanSample> samples;
};

struct ScanOptions {
    /// Grid t_k = k t_step for k = 0..K-1 instead of k = 1..K (K = t_max / t_step).
    bool include_origin = false;
    unsigned threads = 1;
};

/// Boundary-heavy sampling of a disc: rings at r, 2r/3, r/3 with 16, 10
/// and 5 points, plus the centre (32 points).
inline std::vector<cdouble> disc_samples(const Disc& d) {
    std::vector<cdouble> pts{d.center};
    const std::pair<double, int> rings[] = {{1.0, 16}, {2.0 / 3.0, 10}, {1.0 / 3.0, 5}};
    for (const auto& [frac, count] : rings) {
        for (int k = 0; k < count; ++k) {
            const double ang = 2.0 * std::numbers::pi * k / count;
            pts.push_back(d.center + std::polar(frac * d.radius, ang));
        }
    }
    return pts;
}

inline void check_universality_disc(const Disc& d) {
    if (!(d.radius > 0.0)) throw DomainError("universality_scan: radius must be positive");
    if (!(d.center.real() > 0.5 && d.center.real() < 1.0)) {
        throw DomainError("universality_scan: disc centre must satisfy 1/2 < Re < 1");
    }
    if (!(d.center.real() - d.radius > 0.5 && d.center.real() + d.radius < 1.0)) {
        throw DomainError("universality_scan: disc leaves the strip 1/2 < Re s < 1");
    }
}

/// `f` holds the target sampled on disc_samples(region), in that order.
inline UniversalityReport universality_scan(const Disc& region, const std::vector<cdouble>& f, double epsilon,
                                            double t_max, double t_step, const ScanOptions& opt = {}) {
    check_universality_disc(region);
    if (!(epsilon > 0.0)) throw DomainError("universality_scan: epsilon must be positive");
    if (!(t_step > 0.0) || !(t_max >= t_step)) throw DomainError("universality_scan: need 0 < t_step <= t_max");
    const auto pts = disc_samples(region);
    if (f.size() != pts.size()) throw DomainError("universality_scan: target size does not match the disc grid");

    const auto steps = static_cast<std::size_t>(std::floor(t_max / t_step + 1e-9));
    UniversalityReport rep;
    rep.region = region;
    rep.epsilon = epsilon;
    rep.t_max = t_max;
    rep.t_step = t_step;
    rep.samples.resize(steps);

    parallel_chunks(steps, opt.threads, [&](std::size_t begin, std::size_t end) {
        ShiftedZeta shifted(pts);
        std::vector<cdouble> values;
        for (std::size_t k = begin; k < end; ++k) {
            const double t = t_step * static_cast<double>(opt.include_origin ? k : k + 1);
            shifted.evaluate(t, values);
            double sup = 0.0;
            for (std::size_t j = 0; j < pts.size(); ++j) sup = std::max(sup, std::abs(values[j] - f[j]));
            rep.samples[k] = {t, sup, sup < epsilon};
        }
    });

    std::size_t hits = 0;
    for (const auto& s : rep.samples) {
        if (s.hit) {
            ++hits;
            rep.witnesses.push_back(s.t);
        }
    }
    rep.hit_measure = static_cast<double>(hits) * t_step / t_max;
    return rep;
}

inline UniversalityReport universality_scan(const Disc& region, const std::function<cdouble(cdouble)>& target,
                                            double epsilon, double t_max, double t_step,
                                            const ScanOptions& opt = {}) {
    check_universality_disc(region);
    const auto pts = disc_samples(region);
    std::vector<cdouble> f(pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j) f[j] = target(pts[j]);
    return universality_scan(region, f, epsilon, t_max, t_step, opt);
}

/// Self-approximation: target is zeta itself on the disc.
inline UniversalityReport bagchi_scan(const Disc& region, double epsilon, double t_max, double t_step,
                                      const ScanOptions& opt = {}) {
    check_universality_disc(region);
    const auto pts = disc_samples(region);
    ShiftedZeta base(pts);
    std::vector<cdouble> at_zero;
    base.evaluate(0.0, at_zero);
    // Same evaluator at t = 0 as target, so the origin is an exact witness.
    return universality_scan(region, at_zero, epsilon, t_max, t_step, opt);
}

}  // namespace tzlab::zetalab
