#pragma once

// Small-integer number theory on 64-bit values. Products go through
// __int128 so every modulus below 2^63 is safe.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "wittcft/errors.hpp"

namespace wittcft::nt {

using i64 = std::int64_t;

inline i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 mul_mod(i64 a, i64 b, i64 m) {
    return static_cast<i64>((static_cast<__int128>(mod(a, m)) * mod(b, m)) % m);
}

inline i64 pow_mod(i64 base, std::uint64_t exp, i64 m) {
    if (m == 1) return 0;
    i64 result = 1;
    i64 b = mod(base, m);
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, b, m);
        b = mul_mod(b, b, m);
        exp >>= 1U;
    }
    return result;
}

inline i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

/// Inverse of a modulo m, or nullopt when gcd(a, m) != 1.
inline std::optional<i64> inverse_mod(i64 a, i64 m) {
    if (m == 1) return 0;
    i64 old_r = mod(a, m), r = m;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        std::tie(old_r, r) = std::pair{r, old_r - q * r};
        std::tie(old_s, s) = std::pair{s, old_s - q * s};
    }
    if (old_r != 1) return std::nullopt;
    return mod(old_s, m);
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    i64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic Miller-Rabin witnesses for 64-bit inputs.
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        i64 x = pow_mod(a, static_cast<std::uint64_t>(d), n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline std::vector<i64> primes_below(i64 bound) {
    std::vector<i64> out;
    if (bound <= 2) return out;
    std::vector<bool> sieve(static_cast<std::size_t>(bound), true);
    for (i64 i = 2; i < bound; ++i) {
        if (!sieve[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (i64 j = i * i; j < bound; j += i) sieve[static_cast<std::size_t>(j)] = false;
    }
    return out;
}

/// Distinct prime divisors, ascending.
inline std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> out;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline int valuation(i64 n, i64 p) {
    int v = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline i64 euler_phi(i64 n) {
    i64 result = n;
    for (i64 p : prime_factors(n)) result = result / p * (p - 1);
    return result;
}

inline std::vector<i64> divisors(i64 n) {
    std::vector<i64> out;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Multiplicative order of a unit a modulo m (1 for m == 1).
inline i64 multiplicative_order(i64 a, i64 m) {
    if (m == 1) return 1;
    if (gcd(mod(a, m), m) != 1) fail(ErrorCode::NotAUnit, "multiplicative_order: not a unit");
    i64 x = mod(a, m);
    i64 k = 1;
    while (x != 1) {
        x = mul_mod(x, a, m);
        ++k;
    }
    return k;
}

inline i64 ipow(i64 base, unsigned exp) {
    i64 r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

} // namespace wittcft::nt
