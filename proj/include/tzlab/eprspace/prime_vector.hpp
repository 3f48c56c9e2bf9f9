#pragma once

/**
 * @file prime_vector.hpp
 * @brief Integers as exponent vectors over the primes.
 *
 * n = prod p_i^{r_i} is stored as the sorted list of (p_i, r_i) with r_i >= 1.
 * Factorization is trial division by the primes below 10^6 followed by
 * Pollard-Brent rho; primality uses Miller-Rabin with a witness set that is
 * deterministic for every 64-bit input.
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "tzlab/core/error.hpp"
#include "tzlab/core/primes.hpp"

namespace tzlab::eprspace {

using u64 = std::uint64_t;

class PrimeVector {
public:
    using Entry = std::pair<u64, std::uint32_t>;

    PrimeVector() = default;

    /// Builds from (prime, exponent) pairs. Zero exponents are dropped and
    /// repeated primes are merged.
    static PrimeVector from_entries(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const noexcept { return coords_; }
    bool is_one() const noexcept { return coords_.empty(); }
    std::size_t size() const noexcept { return coords_.size(); }

    /// Exponent of p (0 when absent).
    std::uint32_t exponent(u64 p) const noexcept {
        auto it = std::lower_bound(coords_.begin(), coords_.end(), Entry{p, 0},
                                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
        return (it != coords_.end() && it->first == p) ? it->second : 0;
    }

    /// The represented integer. Throws DomainError on 64-bit overflow.
    u64 to_int() const;

    friend bool operator==(const PrimeVector&, const PrimeVector&) = default;

private:
    std::vector<Entry> coords_;
};

namespace detail {

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

inline u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

inline const std::vector<u64>& small_primes() {
    static const std::vector<u64> table = primes_up_to(1'000'000);
    return table;
}

inline u64 pollard_brent(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u64 m = 128;
        u64 r = 1;
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

}  // namespace detail

/// Deterministic Miller-Rabin for all 64-bit n.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline PrimeVector PrimeVector::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end());
    PrimeVector v;
    for (const auto& [p, r] : entries) {
        if (r == 0) continue;
        if (!v.coords_.empty() && v.coords_.back().first == p) {
            v.coords_.back().second += r;
        } else {
            v.coords_.push_back({p, r});
        }
    }
    return v;
}

inline u64 PrimeVector::to_int() const {
    u64 n = 1;
    for (const auto& [p, r] : coords_) {
        for (std::uint32_t i = 0; i < r; ++i) {
            if (n > std::numeric_limits<u64>::max() / p) throw DomainError("PrimeVector::to_int: overflow");
            n *= p;
        }
    }
    return n;
}

namespace detail {

inline void split_large(u64 n, std::vector<PrimeVector::Entry>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back({n, 1});
        return;
    }
    const u64 d = pollard_brent(n);
    split_large(d, out);
    split_large(n / d, out);
}

}  // namespace detail

/// Complete factorization of 1 <= n < 2^63.
inline PrimeVector factorize(u64 n) {
    if (n == 0) throw DomainError("factorize: n must be >= 1");
    if (n > static_cast<u64>(std::numeric_limits<std::int64_t>::max())) {
        throw DomainError("factorize: n must be <= 2^63-1");
    }
    std::vector<PrimeVector::Entry> entries;
    for (u64 p : detail::small_primes()) {
        if (p * p > n) break;
        if (n % p) continue;
        std::uint32_t r = 0;
        while (n % p == 0) {
            n /= p;
            ++r;
        }
        entries.push_back({p, r});
    }
    if (n > 1) {
        const u64 bound = detail::small_primes().back();
        if (n <= bound * bound) {
            entries.push_back({n, 1});
        } else {
            detail::split_large(n, entries);
        }
    }
    return PrimeVector::from_entries(std::move(entries));
}

/// Factorizations of 1..n_max via a smallest-prime-factor sieve; element
/// i holds factorize(i + 1).
inline std::vector<PrimeVector> factorize_range(u64 n_max) {
    if (n_max < 1) throw DomainError("factorize_range: n_max must be >= 1");
    if (n_max > 100'000'000) throw DomainError("factorize_range: n_max too large");
    std::vector<std::uint32_t> spf(n_max + 1, 0);
    for (u64 i = 2; i <= n_max; ++i) {
        if (spf[i]) continue;
        for (u64 j = i; j <= n_max; j += i) {
            if (!spf[j]) spf[j] = static_cast<std::uint32_t>(i);
        }
    }
    std::vector<PrimeVector> out;
    out.reserve(n_max);
    for (u64 n = 1; n <= n_max; ++n) {
        std::vector<PrimeVector::Entry> entries;
        u64 m = n;
        while (m > 1) {
            const u64 p = spf[m];
            std::uint32_t r = 0;
            while (m % p == 0) {
                m /= p;
                ++r;
            }
            entries.push_back({p, r});
        }
        out.push_back(PrimeVector::from_entries(std::move(entries)));
    }
    return out;
}

}  // namespace tzlab::eprspace
