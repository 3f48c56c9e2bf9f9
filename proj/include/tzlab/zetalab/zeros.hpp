#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tzlab/core/error.hpp"
#include "tzlab/core/numeric.hpp"
#include "tzlab/zetalab/zeta.hpp"

namespace tzlab::zetalab {

struct ZeroList {
    std::vector<double> ordinates;  ///< strictly increasing
    double tol = 0.0;               ///< final bracket width of each ordinate
    double t_max = 0.0;
    double grid = 0.0;              ///< scan step actually used
};

struct ZeroScanOptions {
    double grid = 0.05;
    double tol = 1e-9;
    /// Grid halvings allowed when the count disagrees with N(T).
    int max_refinements = 3;
    unsigned threads = 1;
};

namespace detail {

inline double bisect_z(double lo, double hi, double z_lo, double tol) {
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double z_mid = riemann_siegel_Z(mid);
        if (z_mid == 0.0) return mid;
        if ((z_mid < 0.0) == (z_lo < 0.0)) {
            lo = mid;
            z_lo = z_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

inline std::vector<double> scan_zeros(double t_max, double grid, double tol, unsigned threads) {
    // Grid t = grid, 2 grid, ..., closed off at t_max.
    const auto steps = static_cast<std::size_t>(std::floor(t_max / grid));
    std::vector<double> ts;
    ts.reserve(steps + 1);
    for (std::size_t i = 1; i <= steps; ++i) ts.push_back(grid * static_cast<double>(i));
    if (ts.empty() || t_max - ts.back() > 1e-12) ts.push_back(t_max);

    std::vector<double> values(ts.size());
    parallel_chunks(ts.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) values[i] = riemann_siegel_Z(ts[i]);
    });
    std::vector<std::size_t> brackets;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        if ((values[i] < 0.0) != (values[i + 1] < 0.0)) brackets.push_back(i);
    }
    std::vector<double> zeros(brackets.size());
    parallel_chunks(brackets.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t b = begin; b < end; ++b) {
            const std::size_t i = brackets[b];
            zeros[b] = bisect_z(ts[i], ts[i + 1], values[i], tol);
        }
    });
    return zeros;
}

}  // namespace detail

/// Critical-line zeros with 0 < t <= t_max, located as sign changes of Z(t)
/// and refined by bisection. The count is checked against the smooth count
/// N(T) (within +-2); on mismatch the grid is halved, and a ConvergenceError
/// reports missed zeros once the refinements are exhausted.
inline ZeroList find_zeros(double t_max, const ZeroScanOptions& opt = {}) {
    if (!(t_max > 0.0) || t_max > 1e4) throw DomainError("find_zeros: t_max must lie in (0, 1e4]");
    if (!(opt.grid > 0.0) || opt.grid > 0.1) throw DomainError("find_zeros: grid must lie in (0, 0.1]");
    if (!(opt.tol > 0.0)) throw DomainError("find_zeros: tol must be positive");

    double grid = opt.grid;
    for (int attempt = 0;; ++attempt) {
        auto zeros = detail::scan_zeros(t_max, grid, opt.tol, opt.threads);
        // N(T) is only meaningful once T clears the first zero.
        const double expected = t_max < 14.0 ? 0.0 : smooth_zero_count(t_max);
        if (std::abs(static_cast<double>(zeros.size()) - expected) <= 2.0) {
            return {std::move(zeros), opt.tol, t_max, grid};
        }
        if (attempt >= opt.max_refinements) {
            throw ConvergenceError("find_zeros: missed zeros (found " + std::to_string(zeros.size()) +
                                   ", expected about " + std::to_string(expected) + "); use a finer grid");
        }
        grid /= 2.0;
    }
}

/// x_k = N(t_k) with the smooth counting function, so the mean spacing is 1.
inline std::vector<double> unfold(std::span<const double> ordinates) {
    if (ordinates.empty()) throw DomainError("unfold: empty zero list");
    std::vector<double> out;
    out.reserve(ordinates.size());
    for (double t : ordinates) out.push_back(smooth_zero_count(t));
    return out;
}

inline std::vector<double> unfold(const ZeroList& zeros) { return unfold(zeros.ordinates); }

}  // namespace tzlab::zetalab
