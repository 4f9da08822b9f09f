#include "doctest.h"

#include "support.hpp"
#include "wittcft/parse.hpp"

using namespace wittcft;
using namespace testing_support;

TEST_SUITE("parse") {

TEST_CASE("rings") {
    CHECK(parse_ring("Z") == RingSpec::integers());
    CHECK(parse_ring("Q") == RingSpec::rationals());
    CHECK(parse_ring("mod:12") == RingSpec::mod_ring(12));
    CHECK(parse_ring("F:7") == RingSpec::prime_field(7));
    CHECK(parse_ring("cyc:5") == RingSpec::cyclotomic(5));
    CHECK_THROWS_AS((void)parse_ring("R"), ParseError);
    CHECK_THROWS_AS((void)parse_ring("mod:"), ParseError);
    CHECK_THROWS_AS((void)parse_ring("cyc:x"), ParseError);
    try {
        (void)parse_ring("F:6");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidArgument);
    }
}

TEST_CASE("polynomial literals") {
    const RingSpec z = RingSpec::integers();
    CHECK(parse_polynomial("1-5t+6t^2", z) == zpoly({1, -5, 6}));
    CHECK(parse_polynomial("1 - 2*t", z) == zpoly({1, -2}));
    CHECK(parse_polynomial("-t^3+1", z) == zpoly({1, 0, 0, -1}));
    CHECK(parse_polynomial("1+t-t", z) == zpoly({1}));
    CHECK(parse_polynomial("12", z) == zpoly({12}));
    CHECK(parse_polynomial("1-7t", RingSpec::prime_field(5)) == Polynomial::from_integers(RingSpec::prime_field(5), {1, 3}));
}

TEST_CASE("parse errors carry the span") {
    const RingSpec z = RingSpec::integers();
    auto span = [&](const std::string& s) {
        try {
            (void)parse_polynomial(s, z);
        } catch (const ParseError& e) {
            return std::pair{e.begin(), e.end()};
        }
        FAIL("expected a parse error for " << s);
        return std::pair<std::size_t, std::size_t>{0, 0};
    };
    CHECK(span("1-5x") == std::pair<std::size_t, std::size_t>{3, 4});
    CHECK(span("1-") == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(span("1-5t^") == std::pair<std::size_t, std::size_t>{5, 6});
    CHECK(span("1 2t") == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(span("") == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(span("1-t^9999999") == std::pair<std::size_t, std::size_t>{4, 11});
    try {
        (void)parse_polynomial("1-5x", z);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("   ^") != std::string::npos);
        CHECK(e.code() == ErrorCode::Parse);
    }
}

TEST_CASE("witt literals") {
    const RingSpec z = RingSpec::integers();
    CHECK(parse_witt("1-2t", z) == WittVector(zpoly({1, -2})));
    CHECK(parse_witt("(1-t)/(1-2t)", z) == WittVector(zpoly({1, -1}), zpoly({1, -2})));
    CHECK(parse_witt("1/(1-2t)", z) == WittVector(zpoly({1}), zpoly({1, -2})));
    CHECK_THROWS_AS((void)parse_witt("(1-t", z), ParseError);
    CHECK_THROWS_AS((void)parse_witt("(1-t)/(1-t))", z), ParseError);
    try {
        (void)parse_witt("2-t", z);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidArgument);
    }
}

TEST_CASE("integer lists") {
    CHECK(parse_int_list("3,5, 7") == std::vector<i64>{3, 5, 7});
    CHECK(parse_int_list("").empty());
    CHECK(parse_int_list("-1") == std::vector<i64>{-1});
    CHECK_THROWS_AS((void)parse_int_list("3,,5"), ParseError);
    CHECK_THROWS_AS((void)parse_int_list("3,a"), ParseError);
    CHECK(parse_int("42") == 42);
    CHECK_THROWS_AS((void)parse_int("4,2"), ParseError);
}

}
