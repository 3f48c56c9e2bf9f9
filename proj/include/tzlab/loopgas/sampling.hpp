#pragma once

/**
 * @file sampling.hpp
 * @brief Monte Carlo path and loop ensembles for the lattice kernel.
 *
 * Steps are drawn exactly from the free kernel row F(x,.)/r(x), so the
 * lattice-resolved Gaussian increment (variance hbar eps / m) needs no
 * rounding to sites. The row mass r(x) is kept as a separate factor so the
 * Feynman-Kac weight exp(-eps sum u / hbar) is exactly 1 when u = 0.
 * Loops are exact discrete bridges: from x at remaining steps R the next site
 * y is drawn with probability F(x,y) h_{R-1}(y) / h_R(x), h_R = F^R e_{x0}.
 *
 * Every path has its own generator seeded from (seed, path index), so an
 * ensemble depends only on its arguments, not on the thread count.
 */

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "tzlab/core/error.hpp"
#include "tzlab/core/numeric.hpp"
#include "tzlab/loopgas/kernel.hpp"

namespace tzlab::loopgas {

enum class PathMode { open, loop };

struct PathEnsemble {
    int n_paths = 0;
    int n_steps = 0;
    std::uint64_t seed = 0;
    PathMode mode = PathMode::open;
    int start_site = 0;
    double delta = 0.0;
    /// Site index per step, row-major n_paths x (n_steps + 1).
    std::vector<std::int32_t> paths;
    /// Unwrapped displacement from the start in sites, same layout.
    std::vector<std::int32_t> displacement;
    /// exp(-eps/hbar [u_0/2 + u_1 + ... + u_{n-1} + u_n/2]).
    std::vector<double> weights;
    /// Free-kernel mass carried by each path (product of row sums for open
    /// paths, (F^n)(x0,x0) for loops).
    std::vector<double> mass;

    int site(int path, int step) const { return paths[static_cast<std::size_t>(path) * (n_steps + 1) + step]; }
    int offset(int path, int step) const {
        return displacement[static_cast<std::size_t>(path) * (n_steps + 1) + step];
    }
};

struct Estimate {
    double mean;
    double std_error;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline double trapezoid_action(const LoopLattice& lat, const std::int32_t* sites, int n_steps) {
    double sum = 0.5 * (lat.u(sites[0]) + lat.u(sites[n_steps]));
    for (int s = 1; s < n_steps; ++s) sum += lat.u(sites[s]);
    return lat.eps * sum / lat.hbar;
}

inline Estimate mean_and_error(const std::vector<double>& v) {
    const double n = static_cast<double>(v.size());
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= n;
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean);
    var /= std::max(1.0, n - 1.0);
    return {mean, std::sqrt(var / n)};
}

}  // namespace detail

inline PathEnsemble sample_paths(const LoopLattice& lat, int start_site, int n_paths, int n_steps,
                                 std::uint64_t seed, PathMode mode, unsigned threads = 1) {
    lat.validate();
    if (n_paths < 1) throw DomainError("sample_paths: n_paths must be >= 1");
    if (n_steps < 1) throw DomainError("sample_paths: n_steps must be >= 1");
    if (start_site < 0 || start_site >= lat.n_sites) throw DomainError("sample_paths: start site out of range");
    const FreeKernel fk = build_free_kernel(lat);
    const int n = lat.n_sites;
    const std::size_t stride = static_cast<std::size_t>(n_steps) + 1;

    PathEnsemble ens;
    ens.n_paths = n_paths;
    ens.n_steps = n_steps;
    ens.seed = seed;
    ens.mode = mode;
    ens.start_site = start_site;
    ens.delta = lat.delta();
    ens.paths.assign(stride * n_paths, 0);
    ens.displacement.assign(stride * n_paths, 0);
    ens.weights.assign(n_paths, 1.0);
    ens.mass.assign(n_paths, 1.0);

    std::vector<double> row_sum(n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (const auto& e : fk.rows[i]) row_sum[i] += e.value;
    }
    // Backward vectors for the bridge: h[r] = F^r e_{x0}.
    std::vector<Eigen::VectorXd> h;
    if (mode == PathMode::loop) {
        h.reserve(stride);
        h.push_back(Eigen::VectorXd::Unit(n, start_site));
        for (int r = 1; r <= n_steps; ++r) h.push_back(fk.dense * h.back());
        if (!(h.back()(start_site) > 0.0)) throw DomainError("sample_paths: loop weight underflows");
    }

    parallel_chunks(static_cast<std::size_t>(n_paths), threads, [&](std::size_t begin, std::size_t end) {
        std::vector<double> cdf;
        for (std::size_t p = begin; p < end; ++p) {
            std::mt19937_64 rng(detail::splitmix64(seed ^ detail::splitmix64(p)));
            std::int32_t* sites = &ens.paths[p * stride];
            std::int32_t* disp = &ens.displacement[p * stride];
            sites[0] = start_site;
            disp[0] = 0;
            double mass = 1.0;
            for (int s = 0; s < n_steps; ++s) {
                const auto& row = fk.rows[sites[s]];
                cdf.resize(row.size());
                double acc = 0.0;
                for (std::size_t e = 0; e < row.size(); ++e) {
                    double w = row[e].value;
                    if (mode == PathMode::loop) w *= h[n_steps - s - 1](row[e].target);
                    acc += w;
                    cdf[e] = acc;
                }
                const double target = detail::uniform01(rng) * acc;
                std::size_t pick = 0;
                while (pick + 1 < row.size() && cdf[pick] <= target) ++pick;
                sites[s + 1] = row[pick].target;
                disp[s + 1] = disp[s] + row[pick].offset;
                if (mode == PathMode::open) mass *= row_sum[sites[s]];
            }
            ens.mass[p] = mode == PathMode::open ? mass : h[n_steps](start_site);
            ens.weights[p] = std::exp(-detail::trapezoid_action(lat, sites, n_steps));
        }
    });
    return ens;
}

/// Weighted estimate of q(start -> x1) at the final step (open ensembles).
inline Estimate estimate_propagator(const PathEnsemble& ens, int x1) {
    if (ens.mode != PathMode::open) throw DomainError("estimate_propagator: needs an open ensemble");
    std::vector<double> v(ens.n_paths, 0.0);
    for (int p = 0; p < ens.n_paths; ++p) {
        if (ens.site(p, ens.n_steps) == x1) v[p] = ens.weights[p] * ens.mass[p] / ens.delta;
    }
    return detail::mean_and_error(v);
}

/// Weighted estimate of q(x0 -> x0) from a loop ensemble.
inline Estimate estimate_loop(const PathEnsemble& ens) {
    if (ens.mode != PathMode::loop) throw DomainError("estimate_loop: needs a loop ensemble");
    std::vector<double> v(ens.n_paths);
    for (int p = 0; p < ens.n_paths; ++p) v[p] = ens.weights[p] * ens.mass[p] / ens.delta;
    return detail::mean_and_error(v);
}

/// Sample mean of the squared unwrapped displacement at `step`, in length^2.
inline double mean_square_displacement(const PathEnsemble& ens, int step) {
    if (step < 0 || step > ens.n_steps) throw DomainError("mean_square_displacement: step out of range");
    double sum = 0.0;
    for (int p = 0; p < ens.n_paths; ++p) {
        const double d = ens.offset(p, step) * ens.delta;
        sum += d * d;
    }
    return sum / ens.n_paths;
}

}  // namespace tzlab::loopgas
