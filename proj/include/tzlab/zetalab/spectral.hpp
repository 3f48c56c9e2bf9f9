#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>

#include "tzlab/core/error.hpp"
#include "tzlab/core/numeric.hpp"

namespace tzlab::zetalab {

namespace detail {

inline void check_spectrum(std::span<const double> eigenvalues, const char* who) {
    if (eigenvalues.empty()) throw DomainError(std::string(who) + ": empty spectrum");
    for (double l : eigenvalues) {
        if (!(l > 0.0) || !std::isfinite(l)) throw DomainError(std::string(who) + ": eigenvalues must be positive");
    }
}

}  // namespace detail

/// sum_n lambda_n^{-s} over a finite positive spectrum.
inline std::complex<double> spectral_zeta(std::span<const double> eigenvalues, std::complex<double> s) {
    detail::check_spectrum(eigenvalues, "spectral_zeta");
    std::complex<double> sum = 0.0;
    for (auto it = eigenvalues.rbegin(); it != eigenvalues.rend(); ++it) sum += std::exp(-s * std::log(*it));
    return sum;
}

/// Heat trace Tr exp(-tH) = sum_n exp(-t lambda_n).
inline double heat_trace(std::span<const double> eigenvalues, double t) {
    double sum = 0.0;
    for (double l : eigenvalues) sum += std::exp(-t * l);
    return sum;
}

/// (1/Gamma(s)) int_0^inf t^{s-1} Tr exp(-tH) dt, integrated on log t.
/// Equals spectral_zeta(eigenvalues, s); the 1/Gamma(s) factor is what
/// makes the Mellin identity hold for a discrete spectrum.
inline double heat_trace_mellin(std::span<const double> eigenvalues, double s) {
    detail::check_spectrum(eigenvalues, "heat_trace_mellin");
    if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("heat_trace_mellin: s must be positive");
    const auto [lo_it, hi_it] = std::minmax_element(eigenvalues.begin(), eigenvalues.end());
    const double lmin = *lo_it;
    const double lmax = *hi_it;
    // Below t_lo the integrand is ~ count * t^s (negligible), above t_hi
    // every exponential has died.
    const double t_lo = std::pow(1e-17, 1.0 / s) / lmax;
    const double t_hi = (s + 60.0 + 10.0 * std::sqrt(s)) / lmin;
    auto integrand = [&](double u) {
        const double t = std::exp(u);
        return std::exp(s * u) * heat_trace(eigenvalues, t);
    };
    // Break the log-t range into unit pieces so each stays smooth.
    const double u_lo = std::log(t_lo);
    const double u_hi = std::log(t_hi);
    double total = 0.0;
    for (double a = u_lo; a < u_hi; a += 1.0) {
        total += integrate(integrand, a, std::min(a + 1.0, u_hi), 1e-12).value;
    }
    return total / std::tgamma(s);
}

}  // namespace tzlab::zetalab
