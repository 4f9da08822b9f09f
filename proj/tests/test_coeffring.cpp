#include "doctest.h"

#include "support.hpp"
#include "wittcft/matrix.hpp"

using namespace wittcft;
using namespace testing_support;

namespace {

std::vector<RingSpec> sample_specs() {
    return {RingSpec::integers(),      RingSpec::rationals(),     RingSpec::mod_ring(12),
            RingSpec::prime_field(7),  RingSpec::cyclotomic(5),   RingSpec::cyclotomic(12),
            RingSpec::galois_field(3, 2)};
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

Polynomial random_monic(const RingSpec& spec, int max_degree) {
    const int d = static_cast<int>(uniform(1, max_degree));
    std::vector<RingElement> c;
    for (int i = 0; i < d; ++i) c.push_back(random_element(spec, 5));
    c.push_back(RingElement::one(spec));
    return Polynomial(spec, c);
}

} // namespace

TEST_SUITE("coeffring") {

TEST_CASE("element arithmetic examples") {
    const RingSpec z = RingSpec::integers();
    CHECK(RingElement(z, 2L) * RingElement(z, 3L) == RingElement(z, 6L));

    const RingSpec m10 = RingSpec::mod_ring(10);
    long brute = -1;
    for (long x = 0; x < 10; ++x)
        if ((3 * x) % 10 == 1) brute = x;
    CHECK(brute == 7);
    CHECK(RingElement(m10, 3L).inverse() == RingElement(m10, brute));
    CHECK(code_of([&] { (void)RingElement(m10, 2L).inverse(); }) == ErrorCode::NotAUnit);
}

TEST_CASE("canonical payloads") {
    CHECK(RingElement(RingSpec::mod_ring(10), -3L).integer() == 7);
    const auto q = RingElement::from_rational(RingSpec::rationals(), mpq_class(4, -6));
    CHECK(q.rational().get_num() == -2);
    CHECK(q.rational().get_den() == 3);
    const RingSpec c5 = RingSpec::cyclotomic(5);
    const auto x4 = RingElement::from_coefficients(c5, ints({0, 0, 0, 0, 1}));
    CHECK(x4 == RingElement::from_coefficients(c5, ints({-1, -1, -1, -1})));
    CHECK(x4.coefficients().size() == 4);
}

TEST_CASE("invalid ring specs") {
    CHECK(code_of([] { (void)RingSpec::mod_ring(1); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { (void)RingSpec::prime_field(9); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { (void)RingSpec::cyclotomic(0); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] {
              (void)(RingElement(RingSpec::mod_ring(10), 1L) + RingElement(RingSpec::mod_ring(12), 1L));
          }) == ErrorCode::SpecMismatch);
}

TEST_CASE("ring axioms on random samples") {
    for (const RingSpec& spec : sample_specs()) {
        CAPTURE(spec.name());
        for (int trial = 0; trial < 200; ++trial) {
            const RingElement a = random_element(spec), b = random_element(spec), c = random_element(spec);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == RingElement::zero(spec));
            CHECK(a * RingElement::one(spec) == a);
        }
    }
}

TEST_CASE("inverses where they exist") {
    for (const RingSpec& spec : {RingSpec::mod_ring(12), RingSpec::prime_field(11), RingSpec::rationals(),
                                 RingSpec::galois_field(5, 3), RingSpec::cyclotomic(7)}) {
        CAPTURE(spec.name());
        for (int trial = 0; trial < 60; ++trial) {
            const RingElement a = random_element(spec);
            if (!a.is_unit()) continue;
            CHECK(a * a.inverse() == RingElement::one(spec));
        }
    }
    const RingSpec c5 = RingSpec::cyclotomic(5);
    const RingElement x = RingElement::generator(c5);
    CHECK(x.inverse() == x.pow(4));
    const RingElement one_plus_x = RingElement::one(c5) + x;
    CHECK(one_plus_x * one_plus_x.inverse() == RingElement::one(c5));
    CHECK_FALSE((RingElement::one(c5) - x).is_unit());
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
    CHECK(cyclotomic_polynomial(6) == ints({1, -1, 1}));
    CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
    // prod_{d | n} Phi_d = x^n - 1.
    const RingSpec z = RingSpec::integers();
    for (i64 n = 1; n <= 60; ++n) {
        Polynomial prod = Polynomial::constant(RingElement::one(z));
        for (i64 d = 1; d <= n; ++d)
            if (n % d == 0) prod *= Polynomial::from_integers(z, cyclotomic_polynomial(d));
        std::vector<mpz_class> expect(static_cast<std::size_t>(n + 1), 0);
        expect[0] = -1;
        expect.back() = 1;
        CHECK(prod == Polynomial::from_integers(z, expect));
    }
}

TEST_CASE("poly_mul examples") {
    CHECK(poly_mul(zpoly({1, -2}), zpoly({1, -3})) == zpoly({1, -5, 6}));
    const Polynomial f = zpoly({3, 0, -4, 1});
    CHECK(poly_mul(f, zpoly({1})) == f);
    const RingSpec m2 = RingSpec::mod_ring(2);
    CHECK(poly_mul(Polynomial::from_integers(m2, {1, 1}), Polynomial::from_integers(m2, {1, -1})) ==
          Polynomial::from_integers(m2, {1, 0, 1}));
}

TEST_CASE("resultant examples") {
    const Polynomial a = zpoly({-2, 1}), b = zpoly({-3, 1});
    const mpz_class oracle = cofactor_det(sylvester(ints({-2, 1}), ints({-3, 1})));
    CHECK(oracle == -1);
    CHECK(poly_resultant(a, b).integer() == oracle);
    // lc(f)^deg g * prod g(roots of f) = (2 - 3).
    CHECK(poly_resultant(a, b).integer() == 2 - 3);
    CHECK(poly_resultant(zpoly({5, -1, 0, 1}), zpoly({1})).integer() == 1);
    CHECK(poly_resultant(zpoly({-1, 0, 1}), zpoly({-1, 1})).integer() == 0);
    CHECK(code_of([] { (void)poly_resultant(zpoly({}), zpoly({})); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("resultant agrees with the cofactor Sylvester oracle") {
    const RingSpec z = RingSpec::integers();
    for (int trial = 0; trial < 150; ++trial) {
        std::vector<mpz_class> f, g;
        const long df = uniform(1, 4), dg = uniform(1, 4);
        for (long i = 0; i <= df; ++i) f.emplace_back(uniform(-6, 6));
        for (long i = 0; i <= dg; ++i) g.emplace_back(uniform(-6, 6));
        if (f.back() == 0) f.back() = 1;
        if (g.back() == 0) g.back() = -1;
        const mpz_class oracle = cofactor_det(sylvester(f, g));
        const Polynomial pf = Polynomial::from_integers(z, f), pg = Polynomial::from_integers(z, g);
        CHECK(resultant_subresultant(pf, pg).integer() == oracle);
        CHECK(resultant_sylvester(pf, pg).integer() == oracle);
    }
}

TEST_CASE("resultant via integer roots") {
    for (int trial = 0; trial < 100; ++trial) {
        const long k = uniform(1, 4);
        Polynomial f = zpoly({1});
        std::vector<long> roots;
        for (long i = 0; i < k; ++i) {
            roots.push_back(uniform(-5, 5));
            f *= zpoly({-roots.back(), 1});
        }
        const Polynomial g = random_unit_constant_poly(RingSpec::integers(), 4, 6);
        mpz_class expect = 1;
        for (long r : roots) expect *= g.evaluate(RingElement(RingSpec::integers(), r)).integer();
        CHECK(poly_resultant(f, g).integer() == expect);
    }
}

TEST_CASE("resultant is multiplicative") {
    for (const RingSpec& spec : {RingSpec::integers(), RingSpec::prime_field(7), RingSpec::mod_ring(12),
                                 RingSpec::cyclotomic(5), RingSpec::rationals()}) {
        CAPTURE(spec.name());
        for (int trial = 0; trial < 40; ++trial) {
            const Polynomial f = random_monic(spec, 4), g = random_monic(spec, 4), h = random_monic(spec, 4);
            CHECK(poly_resultant(f, g * h) == poly_resultant(f, g) * poly_resultant(f, h));
        }
    }
}

TEST_CASE("subresultant and Sylvester agree over cyclotomic rings") {
    const RingSpec c5 = RingSpec::cyclotomic(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Polynomial f = random_monic(c5, 3), g = random_unit_constant_poly(c5, 3, 4);
        CHECK(resultant_subresultant(f, g) == resultant_sylvester(f, g));
    }
}

TEST_CASE("Berkowitz determinant agrees with cofactor expansion") {
    const RingSpec z = RingSpec::integers();
    const RingElement zero = RingElement::zero(z), one = RingElement::one(z);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = static_cast<std::size_t>(uniform(1, 5));
        std::vector<std::vector<mpz_class>> raw(n, std::vector<mpz_class>(n));
        Matrix<RingElement> m(n, std::vector<RingElement>(n, zero));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                raw[i][j] = uniform(-7, 7);
                m[i][j] = RingElement::from_integer(z, raw[i][j]);
            }
        CHECK(determinant(m, zero, one).integer() == cofactor_det(raw));
    }
}

TEST_CASE("cyclotomic conjugate examples") {
    const RingSpec c5 = RingSpec::cyclotomic(5);
    const RingElement x = RingElement::generator(c5);
    CHECK(cyclotomic_conjugate(x, 1) == x);
    CHECK(cyclotomic_conjugate(x, 2) == x.pow(2));

    // Long division of x^6 by Phi_5 = 1 + x + x^2 + x^3 + x^4, done by hand.
    std::vector<long> r{0, 0, 0, 0, 0, 0, 1};
    for (std::size_t top = r.size() - 1; top >= 4; --top) {
        const long c = r[top];
        for (std::size_t j = 0; j <= 4; ++j) r[top - 4 + j] -= c;
    }
    const RingElement reduced = RingElement::from_coefficients(c5, ints({r[0], r[1], r[2], r[3]}));
    CHECK(reduced == x);
    CHECK(cyclotomic_conjugate(x.pow(3), 2) == reduced);
    CHECK(code_of([&] { (void)cyclotomic_conjugate(x, 5); }) == ErrorCode::NotAUnit);
}

TEST_CASE("cyclotomic conjugation is a ring automorphism compatible with composition") {
    for (i64 n : {5, 7, 8, 12, 15}) {
        const RingSpec spec = RingSpec::cyclotomic(n);
        std::vector<i64> units;
        for (i64 s = 1; s < n; ++s)
            if (std::gcd(s, n) == 1) units.push_back(s);
        for (int trial = 0; trial < 40; ++trial) {
            const RingElement a = random_element(spec), b = random_element(spec);
            const i64 s = units[static_cast<std::size_t>(uniform(0, static_cast<long>(units.size()) - 1))];
            const i64 t = units[static_cast<std::size_t>(uniform(0, static_cast<long>(units.size()) - 1))];
            CHECK(cyclotomic_conjugate(cyclotomic_conjugate(a, t), s) == cyclotomic_conjugate(a, (s * t) % n));
            CHECK(cyclotomic_conjugate(a + b, s) == cyclotomic_conjugate(a, s) + cyclotomic_conjugate(b, s));
            CHECK(cyclotomic_conjugate(a * b, s) == cyclotomic_conjugate(a, s) * cyclotomic_conjugate(b, s));
        }
    }
}

TEST_CASE("polynomial division and gcd") {
    const RingSpec q = RingSpec::rationals();
    const Polynomial f = Polynomial::from_integers(q, {6, -5, 1}), g = Polynomial::from_integers(q, {-2, 1});
    const DivMod qr = divmod(f, g);
    CHECK(qr.quotient == Polynomial::from_integers(q, {-3, 1}));
    CHECK(qr.remainder.is_zero());
    CHECK(poly_gcd(f, Polynomial::from_integers(q, {-6, 1, 1})) == g);
    CHECK(integer_poly_gcd(zpoly({2, -10, 12}), zpoly({-4, 10, -4})) == zpoly({-2, 4}));

    const ExtendedGcd e = ext_gcd(Polynomial::from_integers(q, {1, 0, 1}), Polynomial::from_integers(q, {1, 1}));
    CHECK(e.gcd == Polynomial::from_integers(q, {1}));
    CHECK(e.s * Polynomial::from_integers(q, {1, 0, 1}) + e.t * Polynomial::from_integers(q, {1, 1}) == e.gcd);
}

TEST_CASE("irreducible polynomials over prime fields") {
    for (i64 p : {2, 3, 5, 7}) {
        for (int k = 1; k <= 4; ++k) {
            const auto& f = irreducible_polynomial(p, k);
            REQUIRE(f.size() == static_cast<std::size_t>(k + 1));
            const RingSpec fp = RingSpec::prime_field(p);
            const Polynomial poly = Polynomial::from_integers(fp, f);
            CHECK(is_irreducible_mod_p(poly));
            // No root in F_p for k > 1.
            if (k > 1)
                for (long a = 0; a < p; ++a) CHECK_FALSE(poly.evaluate(RingElement(fp, a)).is_zero());
        }
    }
    CHECK_FALSE(is_irreducible_mod_p(Polynomial::from_integers(RingSpec::prime_field(5), {1, 0, 0, 0, 1})));
}

TEST_CASE("polynomial rendering") {
    CHECK(zpoly({1, -5, 6}).to_string() == "1-5t+6t^2");
    CHECK(zpoly({}).to_string() == "0");
    CHECK(zpoly({0, 1}).to_string("x") == "x");
}

}
