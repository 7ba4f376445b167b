#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "poisgeo/parse.hpp"
#include "poisgeo/poisson.hpp"

using namespace poisgeo;

namespace {

PoissonStructure canonical_qp() {
    const Chart c = {"q", "p"};
    return PoissonStructure::from_entries(
        c, {{{0, 1}, RationalFunction::constant(c, Rational(1))}});
}

PoissonStructure so3_lie_poisson() {
    const Chart c = {"x1", "x2", "x3"};
    return PoissonStructure::from_entries(c, {{{0, 1}, parse_expression("x3", c)},
                                              {{1, 2}, parse_expression("x1", c)},
                                              {{2, 0}, parse_expression("x2", c)}});
}

RationalFunction random_poly(std::mt19937& rng, const Chart& chart, int max_deg) {
    MultiPoly p(chart);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int t = 0; t < 4; ++t) {
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

TEST_CASE("construction enforces antisymmetry and zero diagonal") {
    const Chart c = {"x", "y"};
    RFMatrix bad(2, std::vector<RationalFunction>(2, RationalFunction::zero(c)));
    bad[0][1] = parse_expression("x", c);
    bad[1][0] = parse_expression("x", c);
    CHECK_THROWS_AS(PoissonStructure(c, bad), error);
    RFMatrix diag(2, std::vector<RationalFunction>(2, RationalFunction::zero(c)));
    diag[0][0] = parse_expression("1", c);
    CHECK_THROWS_AS(PoissonStructure(c, diag), error);
}

TEST_CASE("canonical bracket {q,p} = 1") {
    auto p = canonical_qp();
    auto q = RationalFunction::variable(p.chart(), "q");
    auto pp = RationalFunction::variable(p.chart(), "p");
    CHECK(bracket(q, pp, p) == RationalFunction::constant(p.chart(), Rational(1)));
    CHECK(bracket(pp, q, p) == RationalFunction::constant(p.chart(), Rational(-1)));
}

TEST_CASE("so(3) bracket {x1,x2} = x3") {
    auto p = so3_lie_poisson();
    auto x1 = RationalFunction::variable(p.chart(), "x1");
    auto x2 = RationalFunction::variable(p.chart(), "x2");
    CHECK(bracket(x1, x2, p) == parse_expression("x3", p.chart()));
}

TEST_CASE("bracket of anything with itself vanishes") {
    auto p = so3_lie_poisson();
    auto h = parse_expression("x1^2 + x2*x3 - 5", p.chart());
    CHECK(bracket(h, h, p).is_zero());
}

TEST_CASE("bracket errors on chart mismatch") {
    auto p = canonical_qp();
    auto f = parse_expression("x", {"x"});
    CHECK_THROWS_AS(bracket(f, f, p), chart_error);
}

TEST_CASE("hamiltonian vector field: harmonic oscillator") {
    auto p = canonical_qp();
    auto h = parse_expression("(p^2+q^2)/2", p.chart());
    VectorField xh = hamiltonian_vector_field(h, p);
    CHECK(xh.components[0] == parse_expression("p", p.chart()));
    CHECK(xh.components[1] == parse_expression("-q", p.chart()));
    // X_H(G) = {G,H} for a sample G
    auto g = parse_expression("q^3*p - p^2", p.chart());
    CHECK(xh.apply(g) == bracket(g, h, p));
}

TEST_CASE("hamiltonian vector field on so(3): H = x1 picks a bivector column") {
    auto p = so3_lie_poisson();
    VectorField xh =
        hamiltonian_vector_field(RationalFunction::variable(p.chart(), "x1"), p);
    CHECK(xh.components[0].is_zero());
    CHECK(xh.components[1] == parse_expression("-x3", p.chart()));
    CHECK(xh.components[2] == parse_expression("x2", p.chart()));
}

TEST_CASE("constant hamiltonian gives the zero field") {
    auto p = so3_lie_poisson();
    CHECK(hamiltonian_vector_field(RationalFunction::constant(p.chart(), Rational(7)), p)
              .is_zero());
}

TEST_CASE("sharp_apply agrees with the hamiltonian field on exact differentials") {
    auto p = canonical_qp();
    auto q = RationalFunction::variable(p.chart(), "q");
    VectorField sq = sharp_apply(
        {parse_expression("1", p.chart()), parse_expression("0", p.chart())}, p);
    CHECK(sq == hamiltonian_vector_field(q, p));
    CHECK(sq.components[1] == parse_expression("-1", p.chart()));

    auto so3 = so3_lie_poisson();
    VectorField s1 = sharp_apply({parse_expression("1", so3.chart()),
                                  parse_expression("0", so3.chart()),
                                  parse_expression("0", so3.chart())},
                                 so3);
    CHECK(s1 ==
          hamiltonian_vector_field(RationalFunction::variable(so3.chart(), "x1"), so3));
    CHECK(s1.components[1] == parse_expression("-x3", so3.chart()));
    CHECK(s1.components[2] == parse_expression("x2", so3.chart()));

    VectorField z = sharp_apply(
        std::vector<RationalFunction>(3, RationalFunction::zero(so3.chart())), so3);
    CHECK(z.is_zero());
    CHECK_THROWS_AS(sharp_apply({q}, p), chart_error);
}

TEST_CASE("jacobi residuals: canonical and Lie-Poisson structures vanish") {
    for (int n = 1; n <= 3; ++n) {
        auto rep = jacobi_residual(canonical_structure(n));
        CHECK(rep.is_poisson);
    }
    CHECK(jacobi_residual(so3_lie_poisson()).is_poisson);
}

TEST_CASE("jacobi residual flags the perturbed so(3)-like structure") {
    const Chart c = {"x1", "x2", "x3"};
    // pi^{12}=x3, pi^{23}=x1, pi^{31}=x1: residual on (1,2,3) is -x3
    auto p = PoissonStructure::from_entries(c, {{{0, 1}, parse_expression("x3", c)},
                                                {{1, 2}, parse_expression("x1", c)},
                                                {{2, 0}, parse_expression("x1", c)}});
    auto rep = jacobi_residual(p);
    CHECK_FALSE(rep.is_poisson);
    CHECK(rep.residuals.at({0, 1, 2}) == parse_expression("-x3", c));
    CHECK(rep.failing_triples() == std::vector<IndexTriple>{{0, 1, 2}});
}

TEST_CASE("casimir checks") {
    auto so3 = so3_lie_poisson();
    CHECK(casimir_check(parse_expression("x1^2+x2^2+x3^2", so3.chart()), so3));
    CHECK_FALSE(casimir_check(parse_expression("x1", so3.chart()), so3));
    auto p = canonical_qp();
    CHECK_FALSE(casimir_check(RationalFunction::variable(p.chart(), "q"), p));
    CHECK(casimir_check(RationalFunction::constant(p.chart(), Rational(5)), p));
}

TEST_CASE("casimir implies zero hamiltonian field") {
    auto so3 = so3_lie_poisson();
    auto cas = parse_expression("x1^2+x2^2+x3^2", so3.chart());
    CHECK(casimir_check(cas, so3));
    CHECK(hamiltonian_vector_field(cas, so3).is_zero());
}

TEST_CASE("bracket axioms hold exactly on random polynomials") {
    std::mt19937 rng(20250809);
    auto so3 = so3_lie_poisson();
    auto can = canonical_structure(2);
    for (int t = 0; t < 40; ++t) {
        const PoissonStructure& p = (t % 2 == 0) ? so3 : can;
        auto f = random_poly(rng, p.chart(), 3);
        auto g = random_poly(rng, p.chart(), 3);
        auto h = random_poly(rng, p.chart(), 3);
        CHECK(bracket(f, g, p) == -bracket(g, f, p));
        CHECK(bracket(f * g, h, p) == f * bracket(g, h, p) + bracket(f, h, p) * g);
        CHECK(bracket(f + g, h, p) == bracket(f, h, p) + bracket(g, h, p));
    }
}

TEST_CASE("jacobi identity for brackets on valid structures") {
    std::mt19937 rng(424242);
    auto so3 = so3_lie_poisson();
    auto can = canonical_structure(1);
    for (int t = 0; t < 12; ++t) {
        const PoissonStructure& p = (t % 2 == 0) ? so3 : can;
        auto f = random_poly(rng, p.chart(), 2);
        auto g = random_poly(rng, p.chart(), 2);
        auto h = random_poly(rng, p.chart(), 2);
        auto cyc = bracket(bracket(f, g, p), h, p) + bracket(bracket(g, h, p), f, p) +
                   bracket(bracket(h, f, p), g, p);
        CHECK(cyc.is_zero());
    }
}

TEST_CASE("morphism property: X_{f,g} = -[X_f, X_g] with the adopted signs") {
    std::mt19937 rng(99);
    auto so3 = so3_lie_poisson();
    auto can = canonical_qp();
    for (int t = 0; t < 10; ++t) {
        const PoissonStructure& p = (t % 2 == 0) ? so3 : can;
        auto f = random_poly(rng, p.chart(), 2);
        auto g = random_poly(rng, p.chart(), 2);
        VectorField lhs = hamiltonian_vector_field(bracket(f, g, p), p);
        VectorField rhs =
            commutator(hamiltonian_vector_field(f, p), hamiltonian_vector_field(g, p));
        CHECK(lhs == -rhs);
    }
}

TEST_CASE("bivector lie derivative vanishes along hamiltonian fields") {
    auto so3 = so3_lie_poisson();
    auto h = parse_expression("x1*x2 + x3^2", so3.chart());
    auto ld = bivector_lie_derivative(hamiltonian_vector_field(h, so3), so3);
    for (const auto& row : ld)
        for (const auto& entry : row) CHECK(entry.is_zero());
}
