#pragma once

/**
 * @file lattice.hpp
 * @brief Divisibility lattice, logarithmic norm and the scaling action.
 */

#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "tzlab/eprspace/prime_vector.hpp"

namespace tzlab::eprspace {

using cdouble = std::complex<double>;

/// Coordinatewise (max, min) of exponents: (lcm, gcd).
inline std::pair<PrimeVector, PrimeVector> lcm_gcd(const PrimeVector& a, const PrimeVector& b) {
    std::vector<PrimeVector::Entry> join;
    std::vector<PrimeVector::Entry> meet;
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    std::size_t i = 0, j = 0;
    while (i < ea.size() || j < eb.size()) {
        if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
            join.push_back(ea[i++]);
        } else if (i == ea.size() || eb[j].first < ea[i].first) {
            join.push_back(eb[j++]);
        } else {
            join.push_back({ea[i].first, std::max(ea[i].second, eb[j].second)});
            meet.push_back({ea[i].first, std::min(ea[i].second, eb[j].second)});
            ++i;
            ++j;
        }
    }
    return {PrimeVector::from_entries(std::move(join)), PrimeVector::from_entries(std::move(meet))};
}

/// a | b: every exponent of a is at most the matching exponent of b.
inline bool divides(const PrimeVector& a, const PrimeVector& b) {
    for (const auto& [p, r] : a.entries()) {
        if (b.exponent(p) < r) return false;
    }
    return true;
}

/// sum r_i log p_i = log n.
inline double log_norm(const PrimeVector& v) {
    double sum = 0.0;
    for (const auto& [p, r] : v.entries()) sum += r * std::log(static_cast<double>(p));
    return sum;
}

/// A prime vector under the scaling action: coordinate r_i becomes -s r_i.
struct ScaledPoint {
    PrimeVector base;
    cdouble s;
    std::vector<std::pair<u64, cdouble>> coords_scaled;

    /// n^-s = exp(sum_i coords_scaled_i log p_i).
    cdouble value() const {
        cdouble acc = 0.0;
        for (const auto& [p, c] : coords_scaled) acc += c * std::log(static_cast<double>(p));
        return std::exp(acc);
    }
};

inline ScaledPoint scale(const PrimeVector& v, cdouble s) {
    ScaledPoint out{v, s, {}};
    out.coords_scaled.reserve(v.size());
    for (const auto& [p, r] : v.entries()) out.coords_scaled.push_back({p, -s * static_cast<double>(r)});
    return out;
}

/// sum over n_lo <= n <= n_hi of exp(-s log_norm(factorize(n))).
inline cdouble trace_exp_range(u64 n_lo, u64 n_hi, cdouble s) {
    if (n_lo < 1 || n_hi < n_lo) throw DomainError("trace_exp_range: need 1 <= n_lo <= n_hi");
    const auto table = factorize_range(n_hi);
    cdouble sum = 0.0;
    for (u64 n = n_hi; n >= n_lo; --n) {
        sum += std::exp(-s * log_norm(table[n - 1]));
    }
    return sum;
}

/// Trace of exp(-s log N) over the integers 1..n_max.
inline cdouble trace_exp(u64 n_max, cdouble s) {
    if (n_max < 1) throw DomainError("trace_exp: n_max must be >= 1");
    return trace_exp_range(1, n_max, s);
}

}  // namespace tzlab::eprspace
