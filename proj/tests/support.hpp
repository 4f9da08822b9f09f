#pragma once

// Shared helpers for the unit tests: seeded generators and small brute-force
// oracles that do not go through the library's own algorithms.

#include <random>
#include <vector>

#include <gmpxx.h>

#include "wittcft/polynomial.hpp"
#include "wittcft/wittring.hpp"

namespace testing_support {

using namespace wittcft;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// Random element of the ring with small integer coefficients.
inline RingElement random_element(const RingSpec& spec, long bound = 9) {
    switch (spec.kind()) {
    case RingKind::Rationals: {
        long den = uniform(1, bound);
        return RingElement::from_rational(spec, mpq_class(uniform(-bound, bound), den));
    }
    case RingKind::Cyclotomic:
    case RingKind::GaloisField: {
        std::vector<mpz_class> v;
        for (std::size_t i = 0; i < spec.width(); ++i) v.emplace_back(uniform(-bound, bound));
        return RingElement::from_coefficients(spec, v);
    }
    default: return RingElement(spec, uniform(-bound, bound));
    }
}

/// Random polynomial with constant term 1 and degree at most max_degree.
inline Polynomial random_unit_constant_poly(const RingSpec& spec, int max_degree, long bound = 9) {
    const int d = static_cast<int>(uniform(0, max_degree));
    std::vector<RingElement> c{RingElement::one(spec)};
    for (int i = 0; i < d; ++i) c.push_back(random_element(spec, bound));
    return Polynomial(spec, c);
}

inline WittVector random_witt(const RingSpec& spec, int max_degree = 4, long bound = 9) {
    return WittVector(random_unit_constant_poly(spec, max_degree, bound),
                      random_unit_constant_poly(spec, max_degree, bound));
}

/// Determinant by cofactor expansion along the first row.
inline mpz_class cofactor_det(const std::vector<std::vector<mpz_class>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    mpz_class total = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<mpz_class>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<mpz_class> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(row);
        }
        mpz_class term = m[0][col] * cofactor_det(minor);
        total += (col % 2 == 0) ? term : mpz_class(-term);
    }
    return total;
}

/// Sylvester matrix of integer polynomials (constant term first), rows of f first.
inline std::vector<std::vector<mpz_class>> sylvester(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g) {
    const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
    std::vector<std::vector<mpz_class>> s(size, std::vector<mpz_class>(size, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = f[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = g[n - j];
    return s;
}

inline std::vector<mpz_class> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

inline Polynomial zpoly(std::initializer_list<long> v) { return Polynomial::from_integers(RingSpec::integers(), v); }

} // namespace testing_support
