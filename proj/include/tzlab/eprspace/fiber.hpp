#pragma once

/**
 * @file fiber.hpp
 * @brief The Cantor bijection N x N -> N and vertical translates of a
 * rectangle in the complex plane.
 */

#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>

#include "tzlab/core/error.hpp"

namespace tzlab::eprspace {

inline constexpr std::uint64_t kPairLimit = std::uint64_t{1} << 31;

/// k = (m+n)(m+n+1)/2 + n, so (1,0) -> 1 and (0,1) -> 2.
inline std::uint64_t pair(std::uint64_t m, std::uint64_t n) {
    if (m >= kPairLimit || n >= kPairLimit) throw DomainError("pair: arguments must be < 2^31");
    const std::uint64_t w = m + n;
    return w * (w + 1) / 2 + n;
}

inline std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t k) {
    // Largest w with w(w+1)/2 <= k.
    auto w = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(k) + 1.0) - 1.0) / 2.0);
    while (w * (w + 1) / 2 > k) --w;
    while ((w + 1) * (w + 2) / 2 <= k) ++w;
    const std::uint64_t n = k - w * (w + 1) / 2;
    const std::uint64_t m = w - n;
    if (m >= kPairLimit || n >= kPairLimit) throw DomainError("unpair: k outside the pairing range");
    return {m, n};
}

/// Axis-aligned rectangle [re_lo, re_hi] x [im_lo, im_hi].
struct Rect {
    double re_lo, re_hi, im_lo, im_hi;

    double width() const { return re_hi - re_lo; }
    double height() const { return im_hi - im_lo; }
    bool contains(std::complex<double> z) const {
        return z.real() >= re_lo && z.real() <= re_hi && z.imag() >= im_lo && z.imag() <= im_hi;
    }
};

struct FiberDomain {
    Rect base_region;
    double period;
    int copies;

    /// K + i k tau.
    Rect copy(int k) const {
        if (k < 0 || k >= copies) throw DomainError("FiberDomain::copy: index out of range");
        const double shift = k * period;
        return {base_region.re_lo, base_region.re_hi, base_region.im_lo + shift, base_region.im_hi + shift};
    }
    bool disjoint() const { return period > base_region.height(); }
    double minimal_period() const { return base_region.height(); }
};

inline FiberDomain fiber_copies(const Rect& base, double tau, int m) {
    if (!(base.width() > 0.0) || !(base.height() > 0.0) || !std::isfinite(base.width()) ||
        !std::isfinite(base.height())) {
        throw DegenerateError("fiber_copies: degenerate rectangle");
    }
    if (m < 1) throw DomainError("fiber_copies: m must be >= 1");
    if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("fiber_copies: tau must be positive");
    return {base, tau, m};
}

}  // namespace tzlab::eprspace
