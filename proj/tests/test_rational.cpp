#include <doctest.h>

#include "fanobig/rational.hpp"

using namespace fanobig;

TEST_CASE("rational construction normalizes") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(-4, 6) == Rational(-2, 3));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(7) == Rational(7, 1));
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational parse accepts p, -p, p/q") {
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-22/7") == Rational(-22, 7));
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK(Rational::parse("0") == Rational(0));
    // Arbitrary precision.
    Rational big = Rational::parse("123456789012345678901234567890/2");
    CHECK(big.numerator() == "61728394506172839450617283945");
    CHECK(big.denominator() == "1");
}

TEST_CASE("rational parse rejects malformed literals") {
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse(" 1"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("/2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("-"), ParseError);
    CHECK_THROWS_AS(Rational::parse("2/2/2"), ParseError);
}

TEST_CASE("rational arithmetic is exact") {
    Rational a(1, 3);
    Rational b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), Error);

    // The float-classic 0.1 + 0.2 == 0.3 holds exactly here.
    CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
}

TEST_CASE("rational comparisons and predicates") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(5, 3) > Rational(1));
    CHECK(Rational(0).is_zero());
    CHECK_FALSE(Rational(1, 2).is_zero());
    CHECK(Rational(6, 3).is_integer());
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK(Rational(-7).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(7, 5).sign() == 1);
}

TEST_CASE("rational display round-trips") {
    CHECK(Rational(3).str() == "3");
    CHECK(Rational(-3).str() == "-3");
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK(Rational(-22, 7).str() == "-22/7");
    CHECK(Rational(4, 6).str() == "2/3");
    for (const char* text : {"0", "-1", "5/4", "-97/13"})
        CHECK(Rational::parse(Rational::parse(text).str()) == Rational::parse(text));
}
