#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "poisgeo/parse.hpp"
#include "poisgeo/ratfunc.hpp"

using namespace poisgeo;

namespace {

RationalFunction rf(const std::string& s, const Chart& chart) {
    return parse_expression(s, chart);
}

// random polynomial-valued RationalFunction, degree <= max_deg
RationalFunction random_poly_rf(std::mt19937& rng, const Chart& chart, int max_deg,
                                int terms = 4) {
    MultiPoly p(chart);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> expo(0, max_deg);
    for (int t = 0; t < terms; ++t) {
        Exponents e(chart.size());
        int budget = max_deg;
        for (auto& k : e) {
            k = std::uniform_int_distribution<int>(0, budget)(rng);
            budget -= k;
        }
        p.add_term(e, Rational(coeff(rng)));
    }
    return RationalFunction(p);
}

}  // namespace

TEST_CASE("normalization cancels common factors") {
    const Chart x = {"x"};
    CHECK(rf("(x+1)/(x+1)", x) == RationalFunction::constant(x, Rational(1)));
    CHECK(rf("(x^2-1)/(x-1)", x) == rf("x+1", x));
    // monic denominator
    RationalFunction f = rf("x/(2*x+2)", x);
    CHECK(f.denominator().leading_coefficient() == Rational(1));
    CHECK(f == rf("(1/2)*x/(x+1)", x));
}

TEST_CASE("normalization is idempotent") {
    const Chart c = {"u", "v"};
    RationalFunction f = rf("(u^2-v^2)/(3*u+3*v)", c);
    RationalFunction g(f.numerator(), f.denominator());
    CHECK(f == g);
    CHECK(f.denominator().leading_coefficient() == Rational(1));
}

TEST_CASE("derivatives: quotient rule") {
    const Chart x = {"x"};
    CHECK(rf("1/x", x).derivative("x") == rf("-1/(x^2)", x));
    const Chart qp = {"q", "p"};
    CHECK(rf("q^2+p^2", qp).derivative("q") == rf("2*q", qp));
    const Chart xyz = {"x1", "x2", "x3"};
    CHECK(rf("x1*x2", xyz).derivative("x3").is_zero());
}

TEST_CASE("mixed partials commute (exact)") {
    std::mt19937 rng(7);
    const Chart c = {"x", "y", "z"};
    for (int t = 0; t < 20; ++t) {
        RationalFunction f = random_poly_rf(rng, c, 4);
        RationalFunction g = random_poly_rf(rng, c, 2);
        if (g.is_zero()) continue;
        RationalFunction h = f / g;
        CHECK(h.derivative("x").derivative("y") == h.derivative("y").derivative("x"));
    }
}

TEST_CASE("product rule holds exactly on random polynomials") {
    std::mt19937 rng(11);
    const Chart c = {"a", "b", "c", "d"};
    for (int t = 0; t < 30; ++t) {
        RationalFunction f = random_poly_rf(rng, c, 4);
        RationalFunction g = random_poly_rf(rng, c, 4);
        for (const auto& v : c) {
            CHECK((f * g).derivative(v) ==
                  f * g.derivative(v) + f.derivative(v) * g);
        }
    }
}

TEST_CASE("evaluation distributes over arithmetic") {
    std::mt19937 rng(13);
    const Chart c = {"x", "y"};
    std::vector<Rational> pt = {Rational(3, 2), Rational(-1, 3)};
    for (int t = 0; t < 20; ++t) {
        RationalFunction f = random_poly_rf(rng, c, 3);
        RationalFunction g = random_poly_rf(rng, c, 3);
        CHECK((f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt));
        CHECK((f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt));
    }
}

TEST_CASE("pole raises an error") {
    const Chart x = {"x"};
    CHECK_THROWS_AS(rf("1/x", x).evaluate({Rational(0)}), pole_error);
    CHECK(rf("(q^2+p^2)", {"q", "p"}).evaluate({Rational(1), Rational(2)}) == Rational(5));
}

TEST_CASE("is_identically_zero decides exact identities") {
    const Chart qp = {"q", "p"};
    RationalFunction q = rf("q", qp), p = rf("p", qp);
    CHECK(is_identically_zero(q * p - p * q));
    const Chart x = {"x"};
    CHECK(is_identically_zero(rf("(x^2-1) - (x-1)*(x+1)", x)));
    CHECK_FALSE(is_identically_zero(rf("x - y", {"x", "y"})));
}

TEST_CASE("substitution composes exactly") {
    const Chart uv = {"u", "v"};
    const Chart x = {"x"};
    RationalFunction f = rf("(u+v)/(u-v)", uv);
    std::vector<RationalFunction> args = {rf("x^2", x), rf("1", x)};
    CHECK(f.substitute(args) == rf("(x^2+1)/(x^2-1)", x));
    CHECK_THROWS_AS(f.substitute({rf("x", x)}), chart_error);
}

TEST_CASE("denominator identically zero is rejected") {
    const Chart x = {"x"};
    MultiPoly zero = MultiPoly::zero(x);
    CHECK_THROWS_AS(RationalFunction(MultiPoly::variable(x, "x"), zero), error);
}
