#pragma once

// Special functions shared by the zeta and fractional-dynamics code:
// complex Gamma (Lanczos), complex log-Gamma (shifted Stirling series)
// and the Bernoulli coefficients B_2k / (2k)! used by Euler-Maclaurin.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace tzlab::special {

using cdouble = std::complex<double>;

namespace detail {

// Lanczos g = 7, n = 9.
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczosCoef = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

inline cdouble lanczos_log_gamma_right(cdouble z) {
    // Valid for Re z >= 0.5.
    z -= 1.0;
    cdouble x = kLanczosCoef[0];
    for (std::size_t i = 1; i < kLanczosCoef.size(); ++i) {
        x += kLanczosCoef[i] / (z + static_cast<double>(i));
    }
    const cdouble t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace detail

/// Gamma function for complex argument (Lanczos approximation, reflection
/// formula for Re z < 1/2). Poles at the non-positive integers return inf.
inline cdouble gamma(cdouble z) {
    constexpr double pi = std::numbers::pi;
    if (z.real() < 0.5) {
        const cdouble s = std::sin(pi * z);
        if (s == 0.0) return {std::numeric_limits<double>::infinity(), 0.0};
        return pi / (s * gamma(1.0 - z));
    }
    return std::exp(detail::lanczos_log_gamma_right(z));
}

/// Principal branch of log Gamma(z) for Re z > 0, continuous in z and real
/// on the positive axis. Shifted Stirling series, |error| ~ 1e-15.
inline cdouble log_gamma(cdouble z) {
    constexpr double half_log_2pi = 0.91893853320467274178;
    cdouble shift_sum = 0.0;
    while (std::abs(z) < 15.0) {
        shift_sum += std::log(z);
        z += 1.0;
    }
    // B_2k / (2k (2k-1)) for k = 1..8
    static constexpr std::array<double, 8> c = {
        1.0 / 12.0,         -1.0 / 360.0,      1.0 / 1260.0,        -1.0 / 1680.0,
        1.0 / 1188.0,       -691.0 / 360360.0, 1.0 / 156.0,         -3617.0 / 122400.0};
    const cdouble inv = 1.0 / z;
    const cdouble inv2 = inv * inv;
    cdouble series = 0.0;
    cdouble pw = inv;
    for (double ck : c) {
        series += ck * pw;
        pw *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + half_log_2pi + series - shift_sum;
}

/// Reciprocal Gamma for real argument; exactly zero at the poles.
inline double rgamma(double x) {
    if (x <= 0.0 && x == std::floor(x)) return 0.0;
    return 1.0 / std::tgamma(x);
}

/// B_2k / (2k)! for k = 1..count, index 0 holds k = 1.
///
/// Uses B_2k/(2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k} with zeta(2k) summed
/// directly for k >= 5 (closed forms below).
inline std::vector<double> bernoulli_over_factorial(std::size_t count) {
    constexpr double pi = std::numbers::pi;
    std::vector<double> out(count);
    const double two_pi_sq = 4.0 * pi * pi;
    double scale = 1.0;
    for (std::size_t k = 1; k <= count; ++k) {
        scale /= two_pi_sq;
        double z2k = 0.0;
        switch (k) {
            case 1: z2k = pi * pi / 6.0; break;
            case 2: z2k = std::pow(pi, 4) / 90.0; break;
            case 3: z2k = std::pow(pi, 6) / 945.0; break;
            case 4: z2k = std::pow(pi, 8) / 9450.0; break;
            default:
                for (int n = 200; n >= 1; --n) z2k += std::pow(static_cast<double>(n), -2.0 * static_cast<double>(k));
        }
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        out[k - 1] = sign * 2.0 * z2k * scale;
    }
    return out;
}

}  // namespace tzlab::special
