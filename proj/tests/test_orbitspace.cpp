#include "doctest.h"

#include <numeric>
#include <set>

#include "support.hpp"
#include "wittcft/orbitspace.hpp"

using namespace wittcft;
using namespace testing_support;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidArgument;
}

std::vector<AbelianField> small_fields(i64 max_level) {
    std::vector<AbelianField> out;
    for (i64 n = 1; n <= max_level; ++n)
        for (const auto& h : all_subgroups(n)) out.emplace_back(n, h);
    return out;
}

} // namespace

TEST_SUITE("orbitspace") {

TEST_CASE("adelic fibers") {
    const MappingTorus t = cc_fiber(AbelianField::cyclotomic(5), 7);
    CHECK(t.order() == 4);
    CHECK(t.group().representative(t.monodromy()) == 2);
    const MappingTorus base = cc_fiber(AbelianField::rationals(), 7);
    CHECK(base.order() == 1);
    CHECK(base.monodromy() == base.group().identity());
    const MappingTorus q5 = cc_fiber(AbelianField::quadratic(5), 11);
    CHECK(q5.order() == 2);
    CHECK(q5.monodromy() == q5.group().identity());
    CHECK(code_of([] { (void)cc_fiber(AbelianField::cyclotomic(5), 5); }) == ErrorCode::Ramified);
}

TEST_CASE("adelic fibers at infinite level") {
    const MappingTorus a = cc_fiber_infinite_level(3, 5);
    CHECK(a.order() == 4);
    CHECK(a.group().representative(a.monodromy()) == 3);
    CHECK_FALSE(a.closed_orbits());
    const MappingTorus b = cc_fiber_infinite_level(7, 5);
    CHECK(b.group().representative(b.monodromy()) == 2);
    CHECK(code_of([] { (void)cc_fiber_infinite_level(3, 6); }) == ErrorCode::NotCoprime);
}

TEST_CASE("packets") {
    const MappingTorus a = deninger_packet(AbelianField::rationals(), 7, 5);
    CHECK(a.order() == 1);
    CHECK(closed_orbit_labels(7, 5).size() == 1);

    const MappingTorus b = deninger_packet(AbelianField::cyclotomic(5), 7, 9);
    CHECK(nt::pow_mod(7, 4, 9) == 7);
    CHECK(b.group().subgroup() == std::vector<i64>{1, 4, 7});
    CHECK(b.order() == 2);
    CHECK(b.monodromy() == b.group().index_of(7));
    CHECK(b.packet()->residue_degree == 4);

    const MappingTorus c = deninger_packet(AbelianField::rationals(), 11, 5);
    CHECK(c.order() == 4);
    CHECK(c.monodromy() == c.group().identity());
    CHECK(code_of([] { (void)deninger_packet(AbelianField::cyclotomic(5), 5, 9); }) == ErrorCode::Ramified);
    CHECK(code_of([] { (void)deninger_packet(AbelianField::cyclotomic(5), 3, 9); }) == ErrorCode::NotCoprime);
}

TEST_CASE("decomposition examples") {
    const FiberDecomposition a = decompose(cc_fiber_infinite_level(2, 5));
    CHECK(a.count == 1);
    CHECK(a.components[0].size() == 4);
    const FiberDecomposition b = decompose(cc_fiber_infinite_level(11, 5));
    CHECK(b.count == 4);
    for (const auto& c : b.components) CHECK(c.size() == 1);
    const FiberDecomposition c = decompose(cc_fiber(AbelianField::quadratic(5), 7));
    CHECK(c.count == 1);
    CHECK(c.components[0].size() == 2);
    CHECK(c.length() == CircleLength{7, 2});
    CHECK(c.length().to_string() == "2·log 7");
}

TEST_CASE("decomposition matches the Artin order and partitions the group") {
    for (const AbelianField& f : small_fields(24)) {
        for (i64 p : nt::primes_below(50)) {
            if (is_ramified(f, p)) continue;
            const MappingTorus t = cc_fiber(f, p);
            const FiberDecomposition d = decompose(t);
            const i64 order = static_cast<i64>(t.group().element_order(artin_symbol(f, p).index));
            std::set<std::size_t> all;
            for (const auto& c : d.components) {
                CHECK(static_cast<i64>(c.size()) == order);
                all.insert(c.members.begin(), c.members.end());
            }
            CHECK(all.size() == t.order());
            CHECK(static_cast<std::size_t>(d.count * d.covering_degree) == f.degree());
        }
    }
}

TEST_CASE("decomposition depends only on the cyclic subgroup") {
    for (i64 m : {5, 7, 9, 13, 15, 16, 21}) {
        for (i64 p : nt::primes_below(30)) {
            if (m % p == 0) continue;
            const MappingTorus t = cc_fiber_infinite_level(p, m);
            const FiberDecomposition d = decompose(t);
            const std::size_t ord = t.group().element_order(t.monodromy());
            for (std::size_t k = 1; k < ord; ++k) {
                if (std::gcd(k, ord) != 1) continue;
                const MappingTorus alt(t.side(), std::make_shared<const UnitQuotient>(t.group()),
                                       t.group().power(t.monodromy(), k), p);
                std::set<std::set<std::size_t>> a, b;
                for (const auto& c : d.components) a.insert({c.members.begin(), c.members.end()});
                for (const auto& c : decompose(alt).components) b.insert({c.members.begin(), c.members.end()});
                CHECK(a == b);
            }
        }
    }
}

TEST_CASE("point normalization") {
    const DeningerPointFL x = normalize_point(make_point(3, 2, 5, 9));
    CHECK(x.unit == ModUnit{3, 5});
    CHECK(x.scale == 1);
    const DeningerPointFL y = make_point(3, 1, 5, 2);
    CHECK(normalize_point(y) == y);
    CHECK(code_of([] { (void)make_point(3, 2, 6, 1); }) == ErrorCode::NotCoprime);
    for (int trial = 0; trial < 300; ++trial) {
        const i64 p = std::vector<i64>{2, 3, 5, 7}[static_cast<std::size_t>(uniform(0, 3))];
        i64 m = uniform(2, 40);
        while (m % p == 0) ++m;
        const auto units = unit_group(m);
        const i64 a = units[static_cast<std::size_t>(uniform(0, static_cast<long>(units.size()) - 1))];
        const mpz_class n(uniform(1, 50));
        const unsigned k = static_cast<unsigned>(uniform(0, 4));
        const DeningerPointFL base = make_point(p, a, m, n);
        mpz_class pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), k);
        const DeningerPointFL moved = make_point(p, nt::mul_mod(a, nt::pow_mod(p, k, m), m), m, n * pk);
        CHECK(normalize_point(base) == normalize_point(moved));
        CHECK(equivalent_points(base, moved));
        CHECK(normalize_point(normalize_point(base)) == normalize_point(base));
        CHECK(is_normalized(normalize_point(base)));
    }
}

TEST_CASE("flow crosses the base circle by the monodromy") {
    const MappingTorus t = cc_fiber(AbelianField::cyclotomic(5), 7);
    const TorusPoint x{0, mpq_class(3, 2)};
    const TorusPoint once = flow(t, x, 7);
    CHECK(once.r == mpq_class(3, 2));
    CHECK(once.element == t.monodromy());
    CHECK(flow(t, once, mpq_class(1, 7)) == x);
    CHECK(flow(t, x, 1) == x);
    for (int trial = 0; trial < 100; ++trial) {
        const mpq_class s(uniform(1, 60), uniform(1, 60)), u(uniform(1, 60), uniform(1, 60));
        CHECK(flow(t, flow(t, x, s), u) == flow(t, x, s * u));
        CHECK(flow(t, flow(t, x, s), 1 / s) == x);
    }
    CHECK(code_of([&] { (void)flow(t, x, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("packet fibers over labels") {
    const AbelianField q5 = AbelianField::quadratic(5);
    const auto split = packet_fiber_over_label(deninger_packet(q5, 11, 5), ClosedOrbitLabel::make(1, 11, 5));
    CHECK(split.size() == 2);
    for (const auto& c : split) CHECK(c.size() == 1);
    const auto inert = packet_fiber_over_label(deninger_packet(q5, 7, 5), ClosedOrbitLabel::make(1, 7, 5));
    CHECK(inert.size() == 1);
    CHECK(inert[0].size() == 2);
    CHECK(inert[0].length == CircleLength{7, 2});
    for (i64 p : {3, 7, 11, 13})
        for (const auto& label : closed_orbit_labels(p, 20)) {
            const auto fiber = packet_fiber_over_label(deninger_packet(AbelianField::rationals(), p, 20), label);
            REQUIRE(fiber.size() == 1);
            CHECK(fiber[0].size() == 1);
        }
    CHECK(code_of([&] {
              (void)packet_fiber_over_label(deninger_packet(q5, 11, 5), ClosedOrbitLabel::make(1, 11, 10));
          }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] {
              (void)packet_fiber_over_label(cc_fiber(q5, 11), ClosedOrbitLabel::make(1, 11, 5));
          }) == ErrorCode::InvalidArgument);
}

TEST_CASE("packet fibers agree with adelic fibers") {
    for (const AbelianField& f : small_fields(20)) {
        const i64 c = f.conductor();
        for (i64 p : nt::primes_below(50)) {
            if (is_ramified(f, p) || c % p == 0) continue;
            const FiberDecomposition cc = decompose(cc_fiber(f, p));
            for (i64 m : {c, 3 * c, 4 * c}) {
                if (m % p == 0) continue;
                const MappingTorus t = deninger_packet(f, p, m);
                for (const auto& label : closed_orbit_labels(p, m)) {
                    const auto fiber = packet_fiber_over_label(t, label);
                    CHECK(static_cast<i64>(fiber.size()) == cc.count);
                    for (const auto& comp : fiber) CHECK(static_cast<i64>(comp.size()) == cc.covering_degree);
                }
            }
        }
    }
}

TEST_CASE("reciprocity rows") {
    const ReciprocityRow a = reciprocity_row(11, 5);
    CHECK(a.legendre == 1);
    CHECK(a.cc_count == 2);
    CHECK(a.deninger_count == 2);
    CHECK(a.agree());
    const ReciprocityRow b = reciprocity_row(7, 5);
    CHECK(b.legendre == -1);
    CHECK(b.cc_count == 1);
    CHECK(b.deninger_count == 1);
    CHECK(code_of([] { (void)reciprocity_row(5, 5); }) == ErrorCode::EqualPrimes);
    CHECK(code_of([] { (void)reciprocity_row(2, 5); }) == ErrorCode::InvalidArgument);
    CHECK(reciprocity_row(3, 7).agree());
}

}
