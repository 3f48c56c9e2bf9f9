#pragma once

/**
 * @file gue.hpp
 * @brief Gaussian Unitary Ensemble sampling and semicircle unfolding.
 *
 * Scaling: real N(0,1) diagonal, off-diagonal real and imaginary parts
 * N(0,1/2), so E|H_ij|^2 = 1 and the spectrum fills [-2 sqrt(dim), 2 sqrt(dim)].
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "tzlab/core/error.hpp"

namespace tzlab::zetalab {

/// Eigenvalues (ascending) of one GUE draw.
inline std::vector<double> gue_eigenvalues(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> diag(0.0, 1.0);
    std::normal_distribution<double> off(0.0, std::sqrt(0.5));
    const auto n = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd h(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        h(i, i) = diag(rng);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double re = off(rng);
            const double im = off(rng);
            h(i, j) = {re, im};
            h(j, i) = {re, -im};
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw ConvergenceError("gue_eigenvalues: eigensolver failed");
    const Eigen::VectorXd ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

/// Integrated semicircle density: expected number of eigenvalues below x.
inline double semicircle_count(double x, std::size_t dim) {
    const double y = std::clamp(x / (2.0 * std::sqrt(static_cast<double>(dim))), -1.0, 1.0);
    return static_cast<double>(dim) * (0.5 + (y * std::sqrt(1.0 - y * y) + std::asin(y)) / std::numbers::pi);
}

/// `trials` independent GUE(dim) draws; for each, the central half of the
/// spectrum unfolded by the semicircle count (unit mean spacing).
/// Deterministic for a fixed seed.
inline std::vector<std::vector<double>> gue_sample(std::size_t dim, std::size_t trials, std::uint64_t seed) {
    if (dim < 20) throw DomainError("gue_sample: dim must be >= 20");
    if (trials < 1) throw DomainError("gue_sample: trials must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<double>> out;
    out.reserve(trials);
    for (std::size_t k = 0; k < trials; ++k) {
        const auto ev = gue_eigenvalues(dim, rng);
        std::vector<double> bulk;
        for (std::size_t i = dim / 4; i < dim - dim / 4; ++i) bulk.push_back(semicircle_count(ev[i], dim));
        out.push_back(std::move(bulk));
    }
    return out;
}

}  // namespace tzlab::zetalab
