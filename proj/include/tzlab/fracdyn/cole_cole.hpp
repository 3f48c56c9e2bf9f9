#pragma once

/**
 * @file cole_cole.hpp
 * @brief Generalized Cole-Cole impedance element.
 *
 * Z(omega) = r_s + r_ct / (1 + (i omega tau)^alpha)
 *
 * The fractional power uses the principal branch, so (i omega tau)^alpha has
 * phase alpha*pi/2 for every omega > 0 and the arc lies in the lower half of
 * the impedance plane. r_s = 0, r_ct = 1 gives the canonical transfer
 * function 1 / (1 + (i omega tau)^alpha).
 */

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "tzlab/core/error.hpp"

namespace tzlab::fracdyn {

using cdouble = std::complex<double>;

class ColeColeModel {
public:
    /// alpha in (0, 1], tau > 0 [s], r_ct > 0 [ohm], r_s >= 0 [ohm].
    ColeColeModel(double alpha, double tau, double r_ct = 1.0, double r_s = 0.0)
        : alpha_(alpha), tau_(tau), r_ct_(r_ct), r_s_(r_s) {
        if (!(std::isfinite(alpha) && std::isfinite(tau) && std::isfinite(r_ct) && std::isfinite(r_s))) {
            throw DomainError("ColeColeModel: non-finite parameter");
        }
        if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("ColeColeModel: alpha must lie in (0, 1]");
        if (!(tau > 0.0)) throw DomainError("ColeColeModel: tau must be positive");
        if (!(r_ct > 0.0)) throw DomainError("ColeColeModel: r_ct must be positive");
        if (!(r_s >= 0.0)) throw DomainError("ColeColeModel: r_s must be non-negative");
    }

    double alpha() const noexcept { return alpha_; }
    double tau() const noexcept { return tau_; }
    double r_ct() const noexcept { return r_ct_; }
    double r_s() const noexcept { return r_s_; }

    /// Fractal dimension d of the interface, alpha = 1/d.
    double fractal_dimension() const noexcept { return 1.0 / alpha_; }

    bool operator==(const ColeColeModel&) const = default;

private:
    double alpha_;
    double tau_;
    double r_ct_;
    double r_s_;
};

/// (i omega tau)^alpha on the principal branch: modulus (omega tau)^alpha,
/// phase alpha*pi/2.
inline cdouble fractional_operator(double alpha, double omega_tau) {
    return std::polar(std::pow(omega_tau, alpha), alpha * std::numbers::pi / 2.0);
}

inline cdouble cole_cole_impedance(const ColeColeModel& model, double omega) {
    if (!std::isfinite(omega)) throw DomainError("cole_cole_impedance: non-finite omega");
    if (omega < 0.0) throw DomainError("cole_cole_impedance: omega must be non-negative");
    const cdouble n = fractional_operator(model.alpha(), omega * model.tau());
    return model.r_s() + model.r_ct() / (1.0 + n);
}

inline std::vector<cdouble> cole_cole_impedance(const ColeColeModel& model, std::span<const double> omegas) {
    std::vector<cdouble> out;
    out.reserve(omegas.size());
    for (double w : omegas) out.push_back(cole_cole_impedance(model, w));
    return out;
}

/// Hyperbolic-dynamic scaling ratio u/v = 1 / n^alpha of the n-th
/// self-similar discretization step.
inline double hyperbolic_ratio(double alpha, double n) {
    if (!(n > 0.0)) throw DomainError("hyperbolic_ratio: n must be positive");
    return std::pow(n, -alpha);
}

}  // namespace tzlab::fracdyn
