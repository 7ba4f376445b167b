#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "poisgeo/multipoly.hpp"

using namespace poisgeo;

namespace {

const Chart kXY = {"x", "y"};

MultiPoly var(const Chart& c, const std::string& n) { return MultiPoly::variable(c, n); }

}  // namespace

TEST_CASE("multipoly basic arithmetic and canonical order") {
    MultiPoly x = var(kXY, "x"), y = var(kXY, "y");
    MultiPoly p = x * x + y * MultiPoly::constant(kXY, Rational(2));
    CHECK(p.degree() == 2);
    CHECK((p - p).is_zero());
    CHECK(p.to_string() == "x^2 + 2*y");
    // graded-lex: x^2 beats x*y? no: same degree, lex compares exponents
    MultiPoly q = x * y + x * x;
    CHECK(q.leading_exponents() == Exponents{2, 0});
}

TEST_CASE("multipoly zero coefficients are dropped") {
    MultiPoly x = var(kXY, "x");
    MultiPoly p = x - x;
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
    CHECK((x * MultiPoly::zero(kXY)).is_zero());
}

TEST_CASE("multipoly derivative") {
    MultiPoly x = var(kXY, "x"), y = var(kXY, "y");
    MultiPoly p = x.pow(3) * y + y.pow(2);
    CHECK(p.derivative("x") == MultiPoly::constant(kXY, Rational(3)) * x.pow(2) * y);
    CHECK(p.derivative("y") == x.pow(3) + MultiPoly::constant(kXY, Rational(2)) * y);
    CHECK(var(kXY, "x").derivative("y").is_zero());
    CHECK_THROWS_AS(p.derivative("z"), chart_error);
}

TEST_CASE("multipoly evaluation") {
    MultiPoly x = var(kXY, "x"), y = var(kXY, "y");
    MultiPoly p = x.pow(2) + y.pow(2);
    CHECK(p.evaluate({Rational(1), Rational(2)}) == Rational(5));
    CHECK(p.evaluate_double({1.0, 2.0}) == Catch::Approx(5.0));
}

TEST_CASE("chart mismatch is rejected") {
    MultiPoly x = var(kXY, "x");
    MultiPoly z = var({"z"}, "z");
    CHECK_THROWS_AS(x + z, chart_error);
}

TEST_CASE("exact division") {
    MultiPoly x = var(kXY, "x"), y = var(kXY, "y");
    MultiPoly a = (x + y) * (x - y);
    CHECK(exact_divide(a, x + y) == x - y);
    CHECK_THROWS_AS(exact_divide(x + y, x), error);
    CHECK(divides(x + y, a));
    CHECK_FALSE(divides(x, a));
}

TEST_CASE("poly_gcd on shared factors") {
    MultiPoly x = var(kXY, "x"), y = var(kXY, "y");
    MultiPoly f = (x + y).pow(2) * (x - y);
    MultiPoly g = (x + y) * (x + MultiPoly::constant(kXY, Rational(1)));
    MultiPoly d = poly_gcd(f, g);
    CHECK(divides(d, f));
    CHECK(divides(d, g));
    CHECK(d.degree() == 1);  // exactly x + y up to normalization
    CHECK(exact_divide(d, x + y).is_constant());
}

TEST_CASE("poly_gcd of coprime polynomials is constant") {
    MultiPoly x = var(kXY, "x"), y = var(kXY, "y");
    CHECK(poly_gcd(x, y).is_constant());
    CHECK(poly_gcd(x + y, x - y).is_constant());
}

TEST_CASE("poly_gcd with zero and constants") {
    MultiPoly x = var(kXY, "x");
    CHECK(poly_gcd(MultiPoly::zero(kXY), x) == x);
    CHECK(poly_gcd(x, MultiPoly::constant(kXY, Rational(3, 2))).is_constant());
}

TEST_CASE("poly_gcd randomized: d divides both and gcd(f/d, g/d) is constant") {
    std::mt19937 rng(20240811);
    const Chart chart = {"x", "y", "z"};
    auto random_poly = [&](int max_deg) {
        MultiPoly p(chart);
        std::uniform_int_distribution<int> coeff(-4, 4), expo(0, max_deg);
        for (int t = 0; t < 4; ++t) {
            Exponents e = {expo(rng), expo(rng), expo(rng)};
            p.add_term(e, Rational(coeff(rng)));
        }
        return p;
    };
    for (int trial = 0; trial < 25; ++trial) {
        MultiPoly common = random_poly(1);
        MultiPoly f = common * random_poly(2);
        MultiPoly g = common * random_poly(2);
        MultiPoly d = poly_gcd(f, g);
        if (f.is_zero() && g.is_zero()) {
            CHECK(d.is_zero());
            continue;
        }
        CHECK(divides(d, f));
        CHECK(divides(d, g));
        if (!common.is_zero() && !f.is_zero() && !g.is_zero()) {
            CHECK(divides(common, f));
            // the gcd absorbs the planted common factor
            CHECK(divides(poly_gcd(common, d), common));
            CHECK(divides(common, d));
        }
        if (!f.is_zero() && !g.is_zero())
            CHECK(poly_gcd(exact_divide(f, d), exact_divide(g, d)).is_constant());
    }
}
