#include <catch2/catch_amalgamated.hpp>

#include "poisgeo/rational.hpp"

using poisgeo::BigInt;
using poisgeo::Rational;

TEST_CASE("rational normal form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, -7).denominator() == 1);
    CHECK(Rational(6, 3).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), poisgeo::error);
}

TEST_CASE("rational arithmetic") {
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK_THROWS_AS(a / Rational(0), poisgeo::error);
    CHECK(a < Rational(2, 3));
    CHECK(Rational(-5, 4).abs() == Rational(5, 4));
}

TEST_CASE("rational big values stay exact") {
    Rational big(BigInt("123456789012345678901234567890"), BigInt(3));
    CHECK((big * Rational(3)).numerator() == BigInt("123456789012345678901234567890"));
    CHECK(big - big == Rational(0));
}

TEST_CASE("rational string round trip") {
    CHECK(Rational::from_string("-7/14") == Rational(-1, 2));
    CHECK(Rational::from_string("42") == Rational(42));
    CHECK(Rational(-1, 2).to_string() == "-1/2");
    CHECK(Rational(5).to_string() == "5");
    CHECK_THROWS_AS(Rational::from_string("x"), poisgeo::parse_error);
}
