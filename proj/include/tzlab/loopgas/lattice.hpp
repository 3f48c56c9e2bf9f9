#pragma once

/**
 * @file lattice.hpp
 * @brief 1D lattice for discretized Feynman-Kac dynamics.
 *
 * Sites x_j = x_min + j delta, j = 0..n_sites-1. With periodic boundaries the
 * circle has length n_sites * delta (site n_sites-1 neighbours site 0).
 * Natural units hbar = m = 1 unless overridden.
 */

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "tzlab/core/error.hpp"

namespace tzlab::loopgas {

enum class Boundary { periodic, reflecting };

inline const char* to_string(Boundary b) { return b == Boundary::periodic ? "periodic" : "reflecting"; }

inline Boundary boundary_from_string(const std::string& s) {
    if (s == "periodic") return Boundary::periodic;
    if (s == "reflecting") return Boundary::reflecting;
    throw DomainError("unknown boundary '" + s + "'");
}

struct LoopLattice {
    double x_min = -8.0;
    double x_max = 8.0;
    int n_sites = 201;
    double eps = 0.01;
    double mass = 1.0;
    double hbar = 1.0;
    std::vector<double> potential;  // empty means u = 0
    Boundary boundary = Boundary::periodic;

    double delta() const { return (x_max - x_min) / (n_sites - 1); }
    double x(int j) const { return x_min + j * delta(); }
    double u(int j) const { return potential.empty() ? 0.0 : potential[j]; }
    /// D = hbar / 2m.
    double diffusion() const { return hbar / (2.0 * mass); }
    /// Per-step standard deviation sqrt(hbar eps / m).
    double step_sigma() const { return std::sqrt(hbar * eps / mass); }
    double period() const { return n_sites * delta(); }
    double stability_ratio() const { return hbar * eps / (mass * delta() * delta()); }
    bool stability_warning() const { return stability_ratio() > 1.0; }

    /// Nearest site to x (clamped).
    int site_of(double xv) const {
        const long j = std::lround((xv - x_min) / delta());
        return static_cast<int>(std::clamp<long>(j, 0, n_sites - 1));
    }

    void set_potential(const std::function<double(double)>& f) {
        potential.resize(n_sites);
        for (int j = 0; j < n_sites; ++j) potential[j] = f(x(j));
    }

    void validate() const {
        if (n_sites < 3) throw DomainError("LoopLattice: n_sites must be >= 3");
        if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
            throw DomainError("LoopLattice: need x_min < x_max");
        }
        if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("LoopLattice: eps must be positive");
        if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("LoopLattice: mass must be positive");
        if (!(hbar > 0.0) || !std::isfinite(hbar)) throw DomainError("LoopLattice: hbar must be positive");
        if (!potential.empty()) {
            if (potential.size() != static_cast<std::size_t>(n_sites)) {
                throw DomainError("LoopLattice: potential size must equal n_sites");
            }
            for (double v : potential) {
                if (!std::isfinite(v)) throw DomainError("LoopLattice: potential values must be finite");
            }
        }
    }
};

}  // namespace tzlab::loopgas
