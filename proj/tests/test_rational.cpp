#include <doctest.h>

#include "echcap/errors.hpp"
#include "echcap/rational.hpp"

using ech::Rational;

TEST_CASE("parsing is exact for fractions, integers and decimals") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("2.99") == Rational(299, 100));
    CHECK(Rational::parse("0.5") == Rational(1, 2));
    CHECK(Rational::parse("-1.25") == Rational(-5, 4));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(Rational::parse(""), ech::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ech::ParseError);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), ech::ParseError);
    CHECK_THROWS_AS(Rational::parse("1e3"), ech::ParseError);
    CHECK_THROWS_AS(Rational::parse("a"), ech::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/ 2"), ech::ParseError);
}

TEST_CASE("canonical string form") {
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-6, 4).str() == "-3/2");
    CHECK(Rational(8, 4).str() == "2");
    CHECK(Rational(0).str() == "0");
}

TEST_CASE("exact field arithmetic and total order") {
    const Rational a(1, 3);
    const Rational b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(a > b);
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK_THROWS_AS(a / Rational(0), ech::Error);
}

TEST_CASE("floor and ceil") {
    CHECK(Rational(7, 2).floor_int64() == 3);
    CHECK(Rational(7, 2).ceil_int64() == 4);
    CHECK(Rational(-7, 2).floor_int64() == -4);
    CHECK(Rational(-7, 2).ceil_int64() == -3);
    CHECK(Rational(4).floor_int64() == 4);
}

TEST_CASE("simplest_between picks the smallest denominator in the interval") {
    CHECK(ech::simplest_between(Rational(0), Rational(1)) == Rational(1, 2));
    CHECK(ech::simplest_between(Rational(1, 3), Rational(1, 2)) == Rational(2, 5));
    CHECK(ech::simplest_between(Rational(2), Rational(5, 2)) == Rational(7, 3));
    CHECK(ech::simplest_between(Rational(299, 100), Rational(7, 2)) == Rational(3));
    CHECK(ech::simplest_between(Rational(-1), Rational(1, 7)) == Rational(0));
    CHECK(ech::simplest_between(Rational(-3, 4), Rational(-1, 2)) == Rational(-2, 3));
    CHECK_THROWS_AS(ech::simplest_between(Rational(1), Rational(1)), ech::Error);
}

TEST_CASE("simplest_between result always lies strictly inside") {
    const Rational lo(139, 100);
    Rational hi(7, 5);
    for (int i = 0; i < 20; ++i) {
        const Rational mid = ech::simplest_between(lo, hi);
        CHECK(lo < mid);
        CHECK(mid < hi);
        hi = mid;
    }
}
