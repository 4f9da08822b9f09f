#include "doctest.h"

#include <numeric>

#include "support.hpp"

using namespace wittcft;
using namespace testing_support;

namespace {

const RingSpec Z = RingSpec::integers();

WittVector w(std::initializer_list<long> num) { return WittVector(zpoly(num)); }
WittVector w(std::initializer_list<long> num, std::initializer_list<long> den) {
    return WittVector(zpoly(num), zpoly(den));
}

std::vector<mpz_class> mpz_list(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<mpz_class> ghost_ints(const WittVector& f, std::size_t n) {
    std::vector<mpz_class> out;
    for (const auto& c : ghost(f, n).components) out.push_back(c.integer());
    return out;
}

// Power-series oracle: coefficients of -t f'(t) / f(t) up to t^n over Z, with
// f = num / den, computed as -t (num'/num - den'/den) by series division.
std::vector<mpz_class> series_log_derivative(const std::vector<mpz_class>& p, std::size_t n) {
    std::vector<mpz_class> a(n + 1, 0);  // p'/p as a power series, a[k] coefficient of t^k
    auto coeff = [&](std::size_t i) { return i < p.size() ? p[i] : mpz_class(0); };
    for (std::size_t k = 0; k <= n; ++k) {
        mpz_class v = coeff(k + 1) * mpz_class(static_cast<unsigned long>(k + 1));
        for (std::size_t i = 1; i <= k; ++i) v -= coeff(i) * a[k - i];
        a[k] = v;  // p(0) = 1
    }
    std::vector<mpz_class> out;  // -t a(t): ghost_k = -a[k-1]
    for (std::size_t k = 1; k <= n; ++k) out.push_back(-a[k - 1]);
    return out;
}

std::vector<mpz_class> series_ghost(const WittVector& f, std::size_t n) {
    auto raw = [](const Polynomial& p) {
        std::vector<mpz_class> v;
        for (const auto& c : p.coefficients()) v.push_back(c.integer());
        return v;
    };
    std::vector<mpz_class> g = series_log_derivative(raw(f.numerator()), n);
    const std::vector<mpz_class> h = series_log_derivative(raw(f.denominator()), n);
    for (std::size_t i = 0; i < n; ++i) g[i] -= h[i];
    return g;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST_SUITE("wittring") {

TEST_CASE("addition examples") {
    CHECK(witt_add(w({1, -2}), w({1, -3})) == w({1, -5, 6}));
    const WittVector f = w({1, 4, -2}, {1, 0, 3});
    CHECK(witt_add(f, WittVector::zero(Z)) == f);
    CHECK(witt_add(w({1, -2}), w({1}, {1, -2})).is_zero());
    CHECK(witt_add(w({1, -2}), w({1}, {1, -2})).to_string() == "1");
}

TEST_CASE("negation examples") {
    CHECK(witt_neg(w({1, -2})) == w({1}, {1, -2}));
    CHECK(witt_neg(w({1, -2})).to_string() == "1/(1-2t)");
    CHECK(witt_neg(WittVector::zero(Z)).is_zero());
    const WittVector f = w({1, 3, 1}, {1, -1});
    CHECK(witt_neg(witt_neg(f)) == f);
    CHECK(witt_add(f, witt_neg(f)).is_zero());
}

TEST_CASE("multiplication examples") {
    CHECK(witt_mul(w({1, -2}), w({1, -3})) == w({1, -6}));
    // Ghost oracle: (5, 13, 35) * (2, 4, 8) = (10, 52, 280) = ghost((1-4t)(1-6t)).
    CHECK(series_ghost(w({1, -5, 6}), 3) == mpz_list({5, 13, 35}));
    CHECK(series_ghost(w({1, -10, 24}), 3) == mpz_list({10, 52, 280}));
    CHECK(witt_mul(w({1, -5, 6}), w({1, -2})) == w({1, -10, 24}));
    const WittVector f = w({1, 2, -7, 3}, {1, -1, 1});
    CHECK(witt_mul(f, teichmuller(RingElement::one(Z))) == f);
}

TEST_CASE("multiplication on split polynomials matches the root formula") {
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<long> a, b;
        for (long i = uniform(1, 3); i > 0; --i) a.push_back(uniform(-4, 4));
        for (long i = uniform(1, 3); i > 0; --i) b.push_back(uniform(-4, 4));
        Polynomial p = zpoly({1}), q = zpoly({1}), expect = zpoly({1});
        for (long x : a) p *= zpoly({1, -x});
        for (long y : b) q *= zpoly({1, -y});
        for (long x : a)
            for (long y : b) expect *= zpoly({1, -x * y});
        CHECK(otimes_factor(p, q) == expect);
        CHECK(otimes_factor(q, p) == expect);
    }
}

TEST_CASE("Frobenius examples") {
    CHECK(frobenius(2, w({1, -3})) == w({1, -9}));
    CHECK(series_ghost(w({1, -5, 6}), 4) == mpz_list({5, 13, 35, 97}));
    CHECK(series_ghost(w({1, -13, 36}), 2) == mpz_list({13, 97}));
    CHECK(frobenius(2, w({1, -5, 6})) == w({1, -13, 36}));
    const WittVector f = w({1, 7, 0, -2}, {1, 3});
    CHECK(frobenius(1, f) == f);
    CHECK(code_of([&] { (void)frobenius(0, f); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("Frobenius on split polynomials raises inverse roots") {
    for (unsigned n = 2; n <= 5; ++n) {
        for (int trial = 0; trial < 15; ++trial) {
            Polynomial p = zpoly({1}), expect = zpoly({1});
            for (long i = uniform(1, 3); i > 0; --i) {
                const long a = uniform(-3, 3);
                p *= zpoly({1, -a});
                long an = 1;
                for (unsigned k = 0; k < n; ++k) an *= a;
                expect *= zpoly({1, -an});
            }
            CHECK(frobenius_factor(n, p) == expect);
        }
    }
}

TEST_CASE("Teichmuller and split counit examples") {
    CHECK(teichmuller(RingElement(Z, 2L)) == w({1, -2}));
    CHECK(teichmuller(RingElement(Z, 0L)).is_zero());
    CHECK(teichmuller(RingElement(Z, 1L)).to_string() == "1-t");
    CHECK(split_counit(w({1, -5, 6})).integer() == 5);
    for (long a = -3; a <= 3; ++a) CHECK(split_counit(teichmuller(RingElement(Z, a))).integer() == a);
    CHECK(split_counit(WittVector::zero(Z)).integer() == 0);
}

TEST_CASE("ghost examples") {
    CHECK(ghost_ints(w({1, -2}), 3) == mpz_list({2, 4, 8}));
    CHECK(ghost_ints(WittVector::zero(Z), 3) == mpz_list({0, 0, 0}));
    CHECK(ghost_ints(w({1, -5, 6}), 2) == mpz_list({5, 13}));
    CHECK(default_ghost_precision(w({1, -5, 6}, {1, 1})) == 10);
    CHECK(code_of([] { (void)ghost(w({1, 1}), 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("ghost agrees with the power-series oracle") {
    for (int trial = 0; trial < 100; ++trial) {
        const WittVector f = random_witt(Z);
        CHECK(ghost_ints(f, 12) == series_ghost(f, 12));
    }
}

TEST_CASE("ring laws on a small random suite") {
    for (int trial = 0; trial < 25; ++trial) {
        const WittVector f = random_witt(Z, 3), g = random_witt(Z, 3), h = random_witt(Z, 2);
        const WittVector fg = witt_mul(f, g);
        CHECK(fg == witt_mul(g, f));
        CHECK(witt_mul(fg, h) == witt_mul(f, witt_mul(g, h)));
        CHECK(witt_mul(f, witt_add(g, h)) == witt_add(fg, witt_mul(f, h)));
        const auto gf = ghost(f, 12), gg = ghost(g, 12), gfg = ghost(fg, 12), gsum = ghost(witt_add(f, g), 12);
        for (std::size_t k = 0; k < 12; ++k) {
            CHECK(gsum.components[k] == gf.components[k] + gg.components[k]);
            CHECK(gfg.components[k] == gf.components[k] * gg.components[k]);
        }
        const unsigned n = static_cast<unsigned>(uniform(2, 3));
        const auto gfrob = ghost(frobenius(n, f), 4);
        const auto glong = ghost(f, 4 * n);
        for (std::size_t k = 1; k <= 4; ++k) CHECK(gfrob.components[k - 1] == glong.components[n * k - 1]);
        CHECK(split_counit(fg) == split_counit(f) * split_counit(g));
        CHECK(split_counit(witt_add(f, g)) == split_counit(f) + split_counit(g));
    }
}

TEST_CASE("Frobenius composition and homomorphy") {
    for (int trial = 0; trial < 15; ++trial) {
        const WittVector f = random_witt(Z, 2), g = random_witt(Z, 2);
        const unsigned n = static_cast<unsigned>(uniform(1, 3)), m = static_cast<unsigned>(uniform(1, 3));
        CHECK(frobenius(n, frobenius(m, f)) == frobenius(n * m, f));
        CHECK(frobenius(n, witt_add(f, g)) == witt_add(frobenius(n, f), frobenius(n, g)));
        CHECK(frobenius(n, witt_mul(f, g)) == witt_mul(frobenius(n, f), frobenius(n, g)));
    }
}

TEST_CASE("Teichmuller lift is multiplicative") {
    for (long a = -5; a <= 5; ++a)
        for (long b = -5; b <= 5; ++b)
            CHECK(witt_mul(teichmuller(RingElement(Z, a)), teichmuller(RingElement(Z, b))) ==
                  teichmuller(RingElement(Z, a * b)));
}

TEST_CASE("normalization over Z removes common factors") {
    const WittVector f = w({1, -5, 6}, {1, -2});
    CHECK(f.numerator() == zpoly({1, -3}));
    CHECK(f.denominator() == zpoly({1}));
    const WittVector g(zpoly({1, -1}) * zpoly({1, 2, 3}), zpoly({1, 2, 3}) * zpoly({1, 1}));
    CHECK(g.numerator() == zpoly({1, -1}));
    CHECK(g.denominator() == zpoly({1, 1}));
    CHECK(code_of([] { (void)WittVector(zpoly({2, 1})); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("operations over other coefficient rings") {
    for (const RingSpec& spec : {RingSpec::prime_field(7), RingSpec::mod_ring(12), RingSpec::rationals(),
                                 RingSpec::cyclotomic(5)}) {
        CAPTURE(spec.name());
        for (int trial = 0; trial < 8; ++trial) {
            const WittVector f = random_witt(spec, 2, 4), g = random_witt(spec, 2, 4);
            const auto gf = ghost(f, 8), gg = ghost(g, 8), gfg = ghost(witt_mul(f, g), 8);
            for (std::size_t k = 0; k < 8; ++k) CHECK(gfg.components[k] == gf.components[k] * gg.components[k]);
            CHECK(witt_mul(f, g) == witt_mul(g, f));
        }
    }
}

TEST_CASE("group ring examples") {
    const RingSpec f7 = RingSpec::prime_field(7);
    auto e = [&](long v) { return RingElement(f7, v); };
    const GroupRingElement x(f7, {{e(2), 1}, {e(3), 1}});
    CHECK(groupring_to_witt(x) == WittVector(Polynomial::from_integers(f7, {1, -5, 6})));
    CHECK(groupring_to_witt(GroupRingElement(f7)).is_zero());
    const WittVector inv = groupring_to_witt(GroupRingElement(f7, {{e(2), -1}}));
    CHECK(inv == WittVector(Polynomial::from_integers(f7, {1}), Polynomial::from_integers(f7, {1, -2})));
    CHECK(code_of([&] { (void)GroupRingElement(f7, {{e(0), 1}}); }) == ErrorCode::NotAUnit);
    const GroupRingElement merged(f7, {{e(2), 2}, {e(3), 1}, {e(2), -2}});
    CHECK(merged.terms().size() == 1);
}

TEST_CASE("decoding to the group ring") {
    const RingSpec f7 = RingSpec::prime_field(7);
    const GroupRingElement decoded = witt_to_groupring(WittVector(Polynomial::from_integers(f7, {1, -5, 6})), 1);
    // Inverse roots by enumeration: a with 1 - 5a^-1 + 6a^-2 = 0, i.e. a^2 - 5a + 6 = 0 in F_7.
    std::vector<long> roots;
    for (long a = 1; a < 7; ++a)
        if ((a * a - 5 * a + 6) % 7 == 0) roots.push_back(a);
    CHECK(roots == std::vector<long>{2, 3});
    CHECK(decoded == GroupRingElement(f7, {{RingElement(f7, 2L), 1}, {RingElement(f7, 3L), 1}}));
    CHECK(witt_to_groupring(WittVector(Polynomial::from_integers(f7, {1, -1})), 1) ==
          GroupRingElement(f7, {{RingElement(f7, 1L), 1}}));

    const RingSpec f5 = RingSpec::prime_field(5);
    const WittVector cubic_root(Polynomial::from_integers(f5, {1, 1, 1}));
    CHECK(code_of([&] { (void)witt_to_groupring(cubic_root, 1); }) == ErrorCode::NotSplit);
    const GroupRingElement over25 = witt_to_groupring(cubic_root, 2);
    CHECK(over25.spec() == RingSpec::galois_field(5, 2));
    CHECK(over25.terms().size() == 2);
    CHECK(groupring_to_witt(over25) == map_coefficients(cubic_root, RingSpec::galois_field(5, 2)));
}

TEST_CASE("group ring roundtrip") {
    for (i64 p : {5, 7, 11}) {
        const RingSpec fp = RingSpec::prime_field(p);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<GroupRingElement::Term> terms;
            for (long i = uniform(0, 4); i > 0; --i)
                terms.push_back({RingElement(fp, uniform(1, p - 1)), uniform(-2, 2)});
            const GroupRingElement x(fp, terms);
            CHECK(witt_to_groupring(groupring_to_witt(x), 1) == x);
        }
    }
}

TEST_CASE("Galois descent examples") {
    const RingSpec c5 = RingSpec::cyclotomic(5);
    const RingElement x = RingElement::generator(c5);
    CHECK(galois_fixed_check(WittVector(Polynomial::from_integers(c5, {1, 1, 1, 1, 1}))));
    Polynomial orbit = Polynomial::from_integers(c5, {1});
    for (std::uint64_t k = 1; k <= 4; ++k) orbit *= Polynomial(c5, {RingElement::one(c5), -x.pow(k)});
    CHECK(orbit == Polynomial::from_integers(c5, {1, 1, 1, 1, 1}));
    CHECK_FALSE(galois_fixed_check(teichmuller(x)));
    CHECK(conjugate(teichmuller(x), 2) == teichmuller(x.pow(2)));
    CHECK(galois_fixed_check(WittVector(Polynomial::from_integers(c5, {1, -3, 2}),
                                        Polynomial::from_integers(c5, {1, 7}))));
}

TEST_CASE("Galois descent matches coefficient inspection") {
    for (i64 n : {3, 4, 5}) {
        const RingSpec spec = RingSpec::cyclotomic(n);
        for (int trial = 0; trial < 30; ++trial) {
            const WittVector f = random_witt(spec, 2, 2);
            CHECK(galois_fixed_check(f) == f.has_rational_integer_coefficients());
        }
    }
    // A common non-rational factor cancels: (1 - x t)(1 + 2t) / (1 - x t).
    const RingSpec c5 = RingSpec::cyclotomic(5);
    const Polynomial lin(c5, {RingElement::one(c5), -RingElement::generator(c5)});
    const WittVector f(lin * Polynomial::from_integers(c5, {1, 2}), lin);
    CHECK(f.numerator() == Polynomial::from_integers(c5, {1, 2}));
    CHECK(galois_fixed_check(f));
}

}
