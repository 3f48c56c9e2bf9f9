#pragma once

/**
 * @file zeta.hpp
 * @brief Riemann zeta evaluation in the critical strip.
 *
 * General-s evaluation is Euler-Maclaurin summation:
 *
 *   zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
 *           + sum_{k=1..M} B_2k/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1} + R_M
 *
 * with |R_M| <= |s+2M+1|/(sigma+2M+1) |T_{M+1}|. N grows with |Im s| so the
 * correction series converges geometrically; M is chosen adaptively.
 * The Riemann-Siegel Z function is the theta-rotation of that same value.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "tzlab/core/error.hpp"
#include "tzlab/core/primes.hpp"
#include "tzlab/core/special.hpp"

namespace tzlab::zetalab {

using cdouble = std::complex<double>;

/// sum_{n=1..n_max} n^-s, accumulated from the smallest term up.
inline cdouble partial_zeta(cdouble s, std::uint64_t n_max) {
    if (n_max < 1) throw DomainError("partial_zeta: n_max must be >= 1");
    cdouble sum = 0.0;
    for (std::uint64_t n = n_max; n >= 1; --n) {
        sum += std::exp(-s * std::log(static_cast<double>(n)));
    }
    return sum;
}

/// prod_{p <= p_max} (1 - p^-s)^-1, Re s > 1.
inline cdouble euler_product(cdouble s, std::uint64_t p_max) {
    if (!(s.real() > 1.0)) throw DomainError("euler_product: requires Re(s) > 1");
    if (p_max < 2) throw DomainError("euler_product: p_max must be >= 2");
    cdouble prod = 1.0;
    for (auto p : primes_up_to(p_max)) {
        prod /= 1.0 - std::exp(-s * std::log(static_cast<double>(p)));
    }
    return prod;
}

struct ZetaPoint {
    cdouble s;
    cdouble value;
    double abs_err_bound = 0.0;
    /// Set when the error bound could not be pushed below 1e-8.
    bool degraded = false;
};

namespace detail {

inline const std::vector<double>& bernoulli_table() {
    static const std::vector<double> table = special::bernoulli_over_factorial(120);
    return table;
}

/// Number of directly summed terms for a given |Im s| (and |s|).
inline std::uint64_t em_terms(cdouble s) {
    return std::max<std::uint64_t>(20, static_cast<std::uint64_t>(std::ceil(std::abs(s.imag()) / 2.0)) + 1);
}

struct TailResult {
    cdouble value;
    double bound;
};

/// Everything after the direct sum: N^{1-s}/(s-1) + N^-s/2 + Bernoulli terms.
inline TailResult em_tail(cdouble s, std::uint64_t big_n) {
    const double n = static_cast<double>(big_n);
    const double log_n = std::log(n);
    const cdouble n_pow = std::exp(-s * log_n);  // N^-s
    cdouble tail = n * n_pow / (s - 1.0) + 0.5 * n_pow;

    const auto& b = bernoulli_table();
    const double inv_n2 = 1.0 / (n * n);
    // term_k = B_2k/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    cdouble poch = s;                // s(s+1)...(s+2k-2)
    cdouble pw = n_pow / n;          // N^{-s-2k+1}
    double bound = std::numeric_limits<double>::infinity();
    double prev_mag = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < b.size(); ++k) {
        const cdouble term = b[k - 1] * poch * pw;
        tail += term;
        // Next term for the remainder bound.
        const double kk = static_cast<double>(k);
        const cdouble poch_next = poch * (s + 2.0 * kk - 1.0) * (s + 2.0 * kk);
        const cdouble next = b[k] * poch_next * pw * inv_n2;
        const double sigma_term = s.real() + 2.0 * kk + 1.0;
        if (sigma_term > 0.0) {
            bound = std::abs(s + 2.0 * kk + 1.0) / sigma_term * std::abs(next);
        }
        const double mag = std::abs(next);
        if (bound < 1e-16 * std::max(1.0, std::abs(tail)) || mag > prev_mag) break;
        prev_mag = mag;
        poch = poch_next;
        pw *= inv_n2;
    }
    return {tail, bound};
}

inline void check_zeta_domain(cdouble s) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) throw DomainError("zeta: non-finite argument");
    if (s == cdouble(1.0, 0.0)) throw DomainError("zeta: pole at s = 1");
    if (s.real() <= -10.0) throw DomainError("zeta: Re(s) must exceed -10");
    if (std::abs(s.imag()) > 1e4) throw DomainError("zeta: |Im(s)| must not exceed 1e4");
}

}  // namespace detail

inline ZetaPoint zeta(cdouble s) {
    detail::check_zeta_domain(s);
    const std::uint64_t big_n = detail::em_terms(s);
    cdouble head = 0.0;
    double abs_head = 0.0;
    for (std::uint64_t n = big_n - 1; n >= 1; --n) {
        const cdouble t = std::exp(-s * std::log(static_cast<double>(n)));
        head += t;
        abs_head += std::abs(t);
    }
    const auto tail = detail::em_tail(s, big_n);
    ZetaPoint out;
    out.s = s;
    out.value = head + tail.value;
    const double rounding = 8.0 * std::numeric_limits<double>::epsilon() *
                            (abs_head + std::abs(tail.value)) * (1.0 + std::abs(s));
    out.abs_err_bound = tail.bound + rounding;
    out.degraded = !(out.abs_err_bound < 1e-8);
    return out;
}

/// xi(s) = (1/2) s (s-1) pi^{-s/2} Gamma(s/2) zeta(s); entire, xi(s) = xi(1-s).
/// Evaluated directly (no reflection) for Re s > 0; xi(0) = xi(1) = 1/2.
inline cdouble completed_xi(cdouble s) {
    if (s == cdouble(1.0, 0.0) || s == cdouble(0.0, 0.0)) return 0.5;
    if (!(s.real() > 0.0)) throw DomainError("completed_xi: requires Re(s) > 0");
    const cdouble z = zeta(s).value;
    const cdouble g = special::gamma(s / 2.0);
    return 0.5 * s * (s - 1.0) * std::exp(-s / 2.0 * std::log(std::numbers::pi)) * g * z;
}

/// Riemann-Siegel theta: arg Gamma(1/4 + it/2) - (t/2) log pi, continuous in t.
inline double riemann_siegel_theta(double t) {
    constexpr double pi = std::numbers::pi;
    if (t >= 10.0) {
        const double t2 = t * t;
        return t / 2.0 * std::log(t / (2.0 * pi)) - t / 2.0 - pi / 8.0 + 1.0 / (48.0 * t) +
               7.0 / (5760.0 * t * t2) + 31.0 / (80640.0 * t * t2 * t2) + 127.0 / (430080.0 * t * t2 * t2 * t2);
    }
    return special::log_gamma(cdouble(0.25, t / 2.0)).imag() - t / 2.0 * std::log(pi);
}

/// Z(t) = e^{i theta(t)} zeta(1/2 + it), real for real t.
inline double riemann_siegel_Z(double t) {
    if (!(t > 0.0)) throw DomainError("riemann_siegel_Z: t must be positive");
    const cdouble z = zeta(cdouble(0.5, t)).value;
    return (std::polar(1.0, riemann_siegel_theta(t)) * z).real();
}

/// Smooth zero-counting function (T/2pi) log(T/2pi) - T/2pi + 7/8.
inline double smooth_zero_count(double t) {
    const double x = t / (2.0 * std::numbers::pi);
    return x * std::log(x) - x + 0.875;
}

/// Evaluates zeta(s_j + i t) for a fixed set of base points s_j and many
/// shifts t, sharing the n^{-it} factors between the points.
class ShiftedZeta {
public:
    explicit ShiftedZeta(std::span<const cdouble> base) : base_(base.begin(), base.end()) {
        if (base_.empty()) throw DomainError("ShiftedZeta: no base points");
        for (const auto& s : base_) max_abs_im_ = std::max(max_abs_im_, std::abs(s.imag()));
    }

    const std::vector<cdouble>& base() const noexcept { return base_; }

    /// zeta(s_j + i t) for every base point, written to `out`.
    void evaluate(double t, std::vector<cdouble>& out) const {
        const std::uint64_t big_n = detail::em_terms(cdouble(0.0, std::abs(t) + max_abs_im_));
        ensure_powers(big_n);
        const std::size_t m = big_n - 1;
        phase_re_.resize(m);
        phase_im_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            const double arg = -t * logs_[i];
            phase_re_[i] = std::cos(arg);
            phase_im_[i] = std::sin(arg);
        }
        out.resize(base_.size());
        for (std::size_t j = 0; j < base_.size(); ++j) {
            const double* pr = pow_re_[j].data();
            const double* pi = pow_im_[j].data();
            double acc_re = 0.0;
            double acc_im = 0.0;
            for (std::size_t i = m; i-- > 0;) {
                acc_re += pr[i] * phase_re_[i] - pi[i] * phase_im_[i];
                acc_im += pr[i] * phase_im_[i] + pi[i] * phase_re_[i];
            }
            const cdouble s = base_[j] + cdouble(0.0, t);
            detail::check_zeta_domain(s);
            out[j] = cdouble(acc_re, acc_im) + detail::em_tail(s, big_n).value;
        }
    }

private:
    void ensure_powers(std::uint64_t big_n) const {
        const std::size_t need = big_n - 1;
        if (logs_.size() >= need) return;
        const std::size_t old = logs_.size();
        logs_.resize(need);
        pow_re_.resize(base_.size());
        pow_im_.resize(base_.size());
        for (auto& v : pow_re_) v.resize(need);
        for (auto& v : pow_im_) v.resize(need);
        for (std::size_t i = old; i < need; ++i) {
            logs_[i] = std::log(static_cast<double>(i + 1));
            for (std::size_t j = 0; j < base_.size(); ++j) {
                const cdouble p = std::exp(-base_[j] * logs_[i]);
                pow_re_[j][i] = p.real();
                pow_im_[j][i] = p.imag();
            }
        }
    }

    std::vector<cdouble> base_;
    double max_abs_im_ = 0.0;
    // Caches; one ShiftedZeta per thread.
    mutable std::vector<double> logs_;
    mutable std::vector<std::vector<double>> pow_re_, pow_im_;
    mutable std::vector<double> phase_re_, phase_im_;
};

}  // namespace tzlab::zetalab
