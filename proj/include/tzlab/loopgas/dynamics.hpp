#pragma once

/**
 * @file dynamics.hpp
 * @brief Forward/backward functionals, thermal time and the fluctuation law.
 */

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "tzlab/core/error.hpp"
#include "tzlab/loopgas/kernel.hpp"

namespace tzlab::loopgas {

struct ForwardBackward {
    /// phi_k = T^k phi0, k = 0..n.
    std::vector<Eigen::VectorXd> phi;
    /// phi_hat_k = T^{n-k} phi1.
    std::vector<Eigen::VectorXd> phi_hat;
    /// rho_k = phi_k * phi_hat_k pointwise.
    std::vector<Eigen::VectorXd> rho;

    /// delta sum_x rho_k(x).
    double mass(std::size_t k, double delta) const { return delta * rho.at(k).sum(); }
};

inline ForwardBackward forward_backward(const TransferKernel& k, const Eigen::VectorXd& phi0,
                                        const Eigen::VectorXd& phi1, int n_steps) {
    const auto n = k.matrix.rows();
    if (n_steps < 0) throw DomainError("forward_backward: n_steps must be >= 0");
    if (phi0.size() != n || phi1.size() != n) throw DomainError("forward_backward: profile size mismatch");
    if ((phi0.array() < 0.0).any() || (phi1.array() < 0.0).any()) {
        throw DomainError("forward_backward: profiles must be nonnegative");
    }
    if (!(phi0.sum() > 0.0) || !(phi1.sum() > 0.0)) throw DomainError("forward_backward: zero profile");
    ForwardBackward fb;
    fb.phi.reserve(n_steps + 1);
    fb.phi_hat.resize(n_steps + 1);
    fb.phi.push_back(phi0);
    for (int s = 0; s < n_steps; ++s) fb.phi.push_back(k.matrix * fb.phi.back());
    fb.phi_hat[n_steps] = phi1;
    for (int s = n_steps; s > 0; --s) fb.phi_hat[s - 1] = k.matrix * fb.phi_hat[s];
    fb.rho.reserve(n_steps + 1);
    for (int s = 0; s <= n_steps; ++s) fb.rho.push_back(fb.phi[s].cwiseProduct(fb.phi_hat[s]));
    return fb;
}

/// tau = beta hbar (k_B absorbed into beta).
inline double thermal_time(double beta, double hbar) {
    if (!(beta > 0.0)) throw DomainError("thermal_time: beta must be positive");
    if (!(hbar > 0.0)) throw DomainError("thermal_time: hbar must be positive");
    return beta * hbar;
}

struct FluctuationBound {
    double dx2;
    /// Quantum window edge beta hbar.
    double cutoff;
    /// dt > beta hbar: outside the quantum window.
    bool thermodynamic;
};

/// dx^2 = (beta hbar / dt - 1) dt^2 / m.
inline FluctuationBound fluctuation_bound(double beta, double dt, double mass, double hbar) {
    const double cutoff = thermal_time(beta, hbar);
    if (!(dt > 0.0)) throw DomainError("fluctuation_bound: dt must be positive");
    if (!(mass > 0.0)) throw DomainError("fluctuation_bound: mass must be positive");
    return {(cutoff / dt - 1.0) * dt * dt / mass, cutoff, dt > cutoff};
}

/// Shannon entropy of phi normalized to a probability vector.
inline double shannon_entropy(const Eigen::VectorXd& phi) {
    const double total = phi.sum();
    if (!(total > 0.0)) throw DomainError("shannon_entropy: profile must have positive mass");
    double h = 0.0;
    for (double v : phi) {
        if (v > 0.0) {
            const double p = v / total;
            h -= p * std::log(p);
        }
    }
    return h;
}

}  // namespace tzlab::loopgas
