#pragma once

/**
 * @file kernel.hpp
 * @brief Transfer kernel and exact transfer-matrix observables.
 *
 *   T(x,y) = delta g(x-y) exp(-eps [u(x)+u(y)] / 2hbar),
 *   g(d)   = sqrt(m / 2 pi hbar eps) exp(-m d^2 / 2 hbar eps).
 *
 * Periodic boundaries sum g over images; reflecting boundaries add the first
 * mirror images in walls half a spacing outside the end sites. Because T
 * carries the quadrature weight delta, (T^n)(x0,x1)/delta approximates the
 * propagator density q(x0,0;x1,n eps) and Tr T^n approximates the loop
 * integral of q(x0,0;x0,t) dx0.
 */

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "tzlab/core/error.hpp"
#include "tzlab/loopgas/lattice.hpp"

namespace tzlab::loopgas {

/// One nonzero entry of a free-kernel row: the target site, the signed
/// displacement in sites (unwrapped across a periodic boundary) and F(x,y).
struct BandEntry {
    int target;
    int offset;
    double value;
};

/// Free (u = 0) kernel in banded form, used by the samplers.
struct FreeKernel {
    std::vector<std::vector<BandEntry>> rows;
    Eigen::MatrixXd dense;
};

struct TransferKernel {
    LoopLattice lattice;
    Eigen::MatrixXd matrix;
    double eps;
};

namespace detail {

inline double gauss_step(const LoopLattice& lat, double d) {
    const double var = lat.hbar * lat.eps / lat.mass;
    return std::exp(-d * d / (2.0 * var)) / std::sqrt(2.0 * std::numbers::pi * var);
}

}  // namespace detail

inline FreeKernel build_free_kernel(const LoopLattice& lat) {
    lat.validate();
    const int n = lat.n_sites;
    const double delta = lat.delta();
    FreeKernel fk;
    fk.rows.resize(n);
    fk.dense = Eigen::MatrixXd::Zero(n, n);
    // Gaussian tails beyond 12 sigma are below 1e-31 of the peak.
    const int w = static_cast<int>(std::ceil(12.0 * lat.step_sigma() / delta)) + 1;
    if (lat.boundary == Boundary::periodic) {
        // Image sums depend only on (j - i) mod n; folding r and n - r onto
        // one value keeps the matrix exactly symmetric.
        std::vector<double> wrapped(n, 0.0);
        for (int k = -w; k <= w; ++k) {
            const int r = ((k % n) + n) % n;
            const int rc = std::min(r, (n - r) % n);
            if (rc == r) wrapped[rc] += delta * detail::gauss_step(lat, std::abs(k) * delta);
        }
        for (int r = 1; r < n; ++r) wrapped[r] = wrapped[std::min(r, n - r)];
        for (int i = 0; i < n; ++i) {
            for (int k = -w; k <= w; ++k) {
                const double v = delta * detail::gauss_step(lat, std::abs(k) * delta);
                if (v == 0.0) continue;
                const int j = ((i + k) % n + n) % n;
                fk.rows[i].push_back({j, k, v});
            }
            for (int j = 0; j < n; ++j) fk.dense(i, j) = wrapped[((j - i) % n + n) % n];
        }
    } else {
        const double a = lat.x_min - 0.5 * delta;
        const double b = lat.x_max + 0.5 * delta;
        for (int i = 0; i < n; ++i) {
            const double xi = lat.x(i);
            for (int j = std::max(0, i - w); j <= std::min(n - 1, i + w); ++j) {
                fk.dense(i, j) += delta * detail::gauss_step(lat, xi - lat.x(j));
            }
            for (int j = 0; j < n; ++j) {
                const double xj = lat.x(j);
                fk.dense(i, j) += delta * (detail::gauss_step(lat, xi + xj - 2.0 * a) +
                                           detail::gauss_step(lat, xi + xj - 2.0 * b));
            }
        }
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (fk.dense(i, j) > 0.0) fk.rows[i].push_back({j, j - i, fk.dense(i, j)});
            }
        }
    }
    return fk;
}

inline TransferKernel build_kernel(const LoopLattice& lat) {
    const FreeKernel fk = build_free_kernel(lat);
    TransferKernel k{lat, fk.dense, lat.eps};
    if (!lat.potential.empty()) {
        Eigen::VectorXd half(lat.n_sites);
        for (int j = 0; j < lat.n_sites; ++j) half(j) = std::exp(-lat.eps * lat.u(j) / (2.0 * lat.hbar));
        for (int i = 0; i < lat.n_sites; ++i) {
            for (int j = 0; j < lat.n_sites; ++j) k.matrix(i, j) *= half(i) * half(j);
        }
    }
    if (!k.matrix.allFinite()) throw DomainError("build_kernel: non-finite kernel entries");
    return k;
}

/// T^n v by repeated application.
inline Eigen::VectorXd propagate(const TransferKernel& k, Eigen::VectorXd v, int n_steps) {
    if (n_steps < 0) throw DomainError("propagate: n_steps must be >= 0");
    if (v.size() != k.matrix.rows()) throw DomainError("propagate: profile size mismatch");
    for (int s = 0; s < n_steps; ++s) v = k.matrix * v;
    return v;
}

/// q(x0 -> x1) after n_steps as a density in x1: (T^n)(x0,x1) / delta.
inline double propagator(const TransferKernel& k, int x0, int x1, int n_steps) {
    const int n = k.lattice.n_sites;
    if (n_steps < 1) throw DomainError("propagator: n_steps must be >= 1");
    if (x0 < 0 || x0 >= n || x1 < 0 || x1 >= n) throw DomainError("propagator: site out of range");
    const Eigen::VectorXd v = propagate(k, Eigen::VectorXd::Unit(n, x1), n_steps);
    return v(x0) / k.lattice.delta();
}

/// Whole row x1 -> q(x0 -> x1) after n_steps.
inline std::vector<double> propagator_row(const TransferKernel& k, int x0, int n_steps) {
    const int n = k.lattice.n_sites;
    if (n_steps < 1) throw DomainError("propagator_row: n_steps must be >= 1");
    if (x0 < 0 || x0 >= n) throw DomainError("propagator_row: site out of range");
    const Eigen::VectorXd v = propagate(k, Eigen::VectorXd::Unit(n, x0), n_steps) / k.lattice.delta();
    return {v.data(), v.data() + v.size()};
}

/// Eigenvalues of the symmetric kernel.
inline Eigen::VectorXd kernel_spectrum(const TransferKernel& k) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(k.matrix, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw ConvergenceError("kernel_spectrum: eigensolver failed");
    return solver.eigenvalues();
}

/// Tr T^n, the lattice loop integral.
inline double loop_partition(const Eigen::VectorXd& spectrum, int n_steps) {
    if (n_steps < 1) throw DomainError("loop_partition: n_steps must be >= 1");
    double sum = 0.0;
    for (double lam : spectrum) sum += std::pow(lam, n_steps);
    return sum;
}

inline double loop_partition(const TransferKernel& k, int n_steps) {
    return loop_partition(kernel_spectrum(k), n_steps);
}

/// S_path / k_B = ln Tr T^n.
inline double path_entropy(const Eigen::VectorXd& spectrum, int n_steps) {
    const double z = loop_partition(spectrum, n_steps);
    if (!(z > 0.0)) throw Error("path_entropy: nonpositive loop partition");
    return std::log(z);
}

inline double path_entropy(const TransferKernel& k, int n_steps) { return path_entropy(kernel_spectrum(k), n_steps); }

}  // namespace tzlab::loopgas
