#pragma once

/**
 * @file mittag_leffler.hpp
 * @brief One-parameter Mittag-Leffler function and fractional relaxation.
 *
 * E_alpha(z) = sum_k z^k / Gamma(alpha k + 1), 0 < alpha <= 2.
 *
 * Evaluation regimes, tried in order:
 *   - alpha = 1: exp(z).
 *   - power series, accepted only when the cancellation estimate
 *     eps * sum|term| / |sum| stays below the accuracy target;
 *   - 0 < alpha < 1 on the negative real axis: the completely monotone
 *     Laplace representation E_alpha(-x) = int_0^inf K(r) exp(-r x^{1/alpha}) dr;
 *   - large |z|: exponential + algebraic asymptotic expansion, with the
 *     optimally truncated tail as error estimate.
 * If none reaches ~1e-8 relative accuracy a ConvergenceError is thrown.
 */

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "tzlab/core/error.hpp"
#include "tzlab/core/numeric.hpp"
#include "tzlab/core/special.hpp"
#include "tzlab/fracdyn/cole_cole.hpp"

namespace tzlab::fracdyn {

namespace detail {

inline constexpr double kMlTarget = 1e-9;

struct SeriesResult {
    std::complex<double> value;
    bool reliable;
};

inline SeriesResult ml_series(double alpha, std::complex<double> z) {
    // Extended precision buys three extra digits against cancellation.
    using real = long double;
    const real r = std::abs(std::complex<real>(z));
    if (r == 0.0L) return {1.0, true};
    const real arg = std::arg(std::complex<real>(z));
    const real log_r = std::log(r);
    const real a = alpha;
    std::complex<real> sum = 0.0L;
    real abs_sum = 0.0L;
    real prev = std::numeric_limits<real>::infinity();
    for (int k = 0; k < 5000; ++k) {
        const real kd = static_cast<real>(k);
        const real log_mag = kd * log_r - std::lgamma(a * kd + 1.0L);
        if (log_mag > 700.0L) return {std::complex<double>(sum), false};
        const real mag = std::exp(log_mag);
        sum += std::polar(mag, kd * arg);
        // Relative rounding of a term tracks the size of its log-magnitude parts.
        abs_sum += mag * (1.0L + kd * std::abs(log_r) + std::abs(log_mag - kd * log_r));
        // Terms decrease monotonically once Gamma outruns r^k.
        if (mag < prev && mag <= 1e-20L * std::abs(sum)) {
            const real cond = abs_sum / std::abs(sum);
            const real eps = std::numeric_limits<real>::epsilon();
            const bool ok = cond * 4.0L * eps < kMlTarget;
            return {std::complex<double>(sum), ok};
        }
        prev = mag;
    }
    return {std::complex<double>(sum), false};
}

/// E_alpha(-x), 0 < alpha < 1, x > 0.
inline double ml_negative_real_laplace(double alpha, double x) {
    constexpr double pi = std::numbers::pi;
    const double s = std::sin(alpha * pi);
    const double c = std::cos(alpha * pi);
    const double rate = std::pow(x, 1.0 / alpha);
    // r = e^u. Small-r weight ~ (s/pi) e^{alpha u}; large r cut by exp(-r rate).
    const double u_lo = std::log(1e-18 * alpha) / alpha;
    const double u_hi = std::log(80.0 / rate);
    if (u_hi <= u_lo) return 0.0;
    auto integrand = [&](double u) {
        const double r = std::exp(u);
        const double ra = std::exp(alpha * u);
        const double denom = ra * ra + 2.0 * ra * c + 1.0;
        return (s / pi) * ra / denom * std::exp(-r * rate);
    };
    // Split at the spectral peak r = 1 where the kernel sharpens as alpha -> 1.
    if (u_lo < 0.0 && u_hi > 0.0) {
        return integrate(integrand, u_lo, 0.0, 1e-12, 15).value + integrate(integrand, 0.0, u_hi, 1e-12, 15).value;
    }
    return integrate(integrand, u_lo, u_hi, 1e-12, 15).value;
}

struct AsymptoticResult {
    std::complex<double> value;
    double error;
};

inline AsymptoticResult ml_asymptotic(double alpha, std::complex<double> z) {
    constexpr double pi = std::numbers::pi;
    const double r = std::abs(z);
    const double arg = std::arg(z);
    std::complex<double> exp_part = 0.0;
    double stokes_error = 0.0;
    const double root = std::pow(r, 1.0 / alpha);
    for (int m = -2; m <= 2; ++m) {
        const double branch = arg + 2.0 * pi * m;
        if (std::abs(branch) < alpha * pi) {
            exp_part += std::exp(std::polar(root, branch / alpha)) / alpha;
        }
        // Near a Stokes line the neglected exponential is of size exp(-root).
        if (std::abs(std::abs(branch) - alpha * pi) < 0.2) stokes_error += std::exp(-root) / alpha;
    }
    std::complex<double> alg = 0.0;
    std::complex<double> zk = 1.0;
    double last = std::numeric_limits<double>::infinity();
    double tail = 0.0;
    for (int k = 1; k < 200; ++k) {
        zk /= z;
        const double rg = special::rgamma(1.0 - alpha * k);
        const std::complex<double> term = zk * rg;
        const double mag = std::abs(term);
        if (rg != 0.0 && mag > last) {
            tail = last;
            break;
        }
        alg -= term;
        if (rg != 0.0) last = mag;
        tail = mag;
        if (mag == 0.0 && rg != 0.0) break;
    }
    return {exp_part + alg, tail + stokes_error};
}

}  // namespace detail

inline std::complex<double> mittag_leffler(double alpha, std::complex<double> z) {
    if (!(alpha > 0.0 && alpha <= 2.0)) throw DomainError("mittag_leffler: alpha must lie in (0, 2]");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("mittag_leffler: non-finite argument");
    if (alpha == 1.0) return std::exp(z);

    if (std::abs(z) <= 60.0) {
        const auto s = detail::ml_series(alpha, z);
        if (s.reliable) return s.value;
    }
    if (alpha < 1.0 && z.imag() == 0.0 && z.real() < 0.0) {
        return detail::ml_negative_real_laplace(alpha, -z.real());
    }
    const auto a = detail::ml_asymptotic(alpha, z);
    if (a.error <= detail::kMlTarget * std::max(std::abs(a.value), 1e-300) && std::isfinite(std::abs(a.value))) {
        return a.value;
    }
    throw ConvergenceError("mittag_leffler: argument in a regime without a reliable expansion");
}

inline double mittag_leffler(double alpha, double x) {
    return mittag_leffler(alpha, std::complex<double>(x, 0.0)).real();
}

/// U(t) = E_alpha(-(t/tau)^alpha): the time-domain relaxation whose
/// frequency response is the canonical Cole-Cole form.
inline std::vector<double> relaxation_response(const ColeColeModel& model, std::span<const double> t_grid) {
    if (t_grid.empty()) throw DomainError("relaxation_response: empty time grid");
    std::vector<double> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("relaxation_response: times must be finite and >= 0");
        out.push_back(mittag_leffler(model.alpha(), -std::pow(t / model.tau(), model.alpha())));
    }
    return out;
}

}  // namespace tzlab::fracdyn
