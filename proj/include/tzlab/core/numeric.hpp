#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <functional>
#include <limits>
#include <thread>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "tzlab/core/error.hpp"

namespace tzlab {

/// n points from 10^lo to 10^hi, evenly spaced in log10.
inline std::vector<double> logspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double f = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
        out[i] = std::pow(10.0, lo + f * (hi - lo));
    }
    return out;
}

inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double f = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
        out[i] = lo + f * (hi - lo);
    }
    return out;
}

struct QuadratureResult {
    double value;
    double error_estimate;
};

/// Adaptive Gauss-Kronrod (7/15) on [a, b]; a or b may be infinite.
/// Throws ConvergenceError when the error estimate misses `rel_tol`.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double rel_tol = 1e-12,
                           unsigned max_depth = 15) {
    double err = 0.0;
    double l1 = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, max_depth, rel_tol, &err, &l1);
    if (!std::isfinite(value) || err > 100.0 * rel_tol * std::max(std::abs(value), l1) + 1e-300) {
        throw ConvergenceError("adaptive quadrature did not converge");
    }
    return {value, err};
}

/// Runs fn(begin, end) over `threads` contiguous chunks of [0, n). Chunk
/// boundaries depend only on (n, threads) so results written by index are
/// identical for any scheduling.
inline void parallel_chunks(std::size_t n, unsigned threads,
                            const std::function<void(std::size_t, std::size_t)>& fn) {
    threads = std::max(1u, threads);
    if (threads == 1 || n < 2) {
        fn(0, n);
        return;
    }
    const std::size_t chunk = (n + threads - 1) / threads;
    std::vector<std::exception_ptr> errors((n + chunk - 1) / chunk);
    {
        std::vector<std::jthread> pool;
        for (std::size_t begin = 0, slot = 0; begin < n; begin += chunk, ++slot) {
            pool.emplace_back([&, begin, slot] {
                try {
                    fn(begin, std::min(n, begin + chunk));
                } catch (...) {
                    errors[slot] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace tzlab
