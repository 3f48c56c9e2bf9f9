#pragma once

/**
 * @file phase.hpp
 * @brief Phase geometry of the alpha-geodesics and the twisted shift algebra.
 *
 * phi(alpha) = (pi/2)(1 - alpha) is the determinism-basis phase and
 * delta(alpha) = pi/4 - phi(alpha) the stochastic-basis phase, so that
 * |delta| + |phi| = pi/4 on the critical band 1/2 <= alpha <= 1.
 *
 * Twisted shifts are words in two shift generators V (a) and U (b) obeying
 * U V = V U e^{2 i delta}. Elements are kept in the normal form V^a U^b e^{i theta}.
 */

#include <cmath>
#include <cstdint>
#include <numbers>

#include "tzlab/core/error.hpp"

namespace tzlab::fracdyn {

struct PhasePair {
    double phi;
    double delta;
};

inline PhasePair phase_angles(double alpha) {
    if (!(alpha >= 0.5 && alpha <= 1.0)) {
        throw DomainError("phase_angles: alpha must lie in the critical band [1/2, 1]");
    }
    constexpr double pi = std::numbers::pi;
    const double phi = (pi / 2.0) * (1.0 - alpha);
    return {phi, pi / 4.0 - phi};
}

/// An angle stored as a fixed-point fraction of a full turn (2^64 units per
/// 2 pi). Addition wraps modulo 2 pi and is exactly associative.
class Phase {
public:
    constexpr Phase() = default;

    static Phase from_radians(double radians) {
        constexpr double two_pi = 2.0 * std::numbers::pi;
        double turns = std::fmod(radians / two_pi, 1.0);
        if (turns < 0.0) turns += 1.0;
        // 2^64 * turns, split to stay inside double's exact integer range.
        const double hi = std::floor(turns * 4294967296.0);
        const double lo = std::round((turns * 4294967296.0 - hi) * 4294967296.0);
        return Phase((static_cast<std::uint64_t>(hi) << 32) + static_cast<std::uint64_t>(lo));
    }

    static constexpr Phase from_raw(std::uint64_t raw) { return Phase(raw); }

    constexpr std::uint64_t raw() const noexcept { return turns_; }

    /// In [0, 2 pi).
    double radians() const noexcept {
        return static_cast<double>(turns_) * (2.0 * std::numbers::pi / 18446744073709551616.0);
    }

    /// In (-pi, pi].
    double signed_radians() const noexcept {
        const double r = radians();
        return r > std::numbers::pi ? r - 2.0 * std::numbers::pi : r;
    }

    constexpr Phase operator+(Phase o) const noexcept { return Phase(turns_ + o.turns_); }
    constexpr Phase operator-(Phase o) const noexcept { return Phase(turns_ - o.turns_); }
    /// Integer multiple, wrapping modulo a full turn.
    constexpr Phase times(std::int64_t k) const noexcept {
        return Phase(turns_ * static_cast<std::uint64_t>(k));
    }
    constexpr bool operator==(const Phase&) const = default;

private:
    constexpr explicit Phase(std::uint64_t turns) : turns_(turns) {}
    std::uint64_t turns_ = 0;
};

struct TwistedShift {
    std::int64_t a = 0;  ///< V-generator steps
    std::int64_t b = 0;  ///< U-generator steps
    Phase theta{};

    static TwistedShift identity() { return {}; }
    static TwistedShift generator_u() { return {0, 1, {}}; }
    static TwistedShift generator_v() { return {1, 0, {}}; }

    bool operator==(const TwistedShift&) const = default;
};

/// (a1, b1, t1)(a2, b2, t2) = (a1 + a2, b1 + b2, t1 + t2 + 2 delta b1 a2).
/// Moving U^b1 past V^a2 costs 2 delta per crossing.
inline TwistedShift twisted_compose(const TwistedShift& g1, const TwistedShift& g2, double delta) {
    const Phase twist = Phase::from_radians(2.0 * delta).times(g1.b * g2.a);
    return {g1.a + g2.a, g1.b + g2.b, g1.theta + g2.theta + twist};
}

/// Phase picked up by g1 g2 relative to g2 g1.
inline Phase commutator_phase(const TwistedShift& g1, const TwistedShift& g2, double delta) {
    const auto lhs = twisted_compose(g1, g2, delta);
    const auto rhs = twisted_compose(g2, g1, delta);
    return lhs.theta - rhs.theta;
}

}  // namespace tzlab::fracdyn
