#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "poisgeo/parse.hpp"
#include "poisgeo/poisson.hpp"

namespace poisgeo {

/// 2-form in coordinates: antisymmetric matrix of coefficients, omega_{ij}
/// being the coefficient of dz_i ^ dz_j (i < j).
class TwoForm {
public:
    TwoForm(Chart chart, RFMatrix matrix)
        : chart_(std::move(chart)), w_(std::move(matrix)) {
        validate();
    }

    static TwoForm from_entries(const Chart& chart,
                                const std::map<std::pair<int, int>, RationalFunction>& entries) {
        size_t n = chart.size();
        RFMatrix m(n, std::vector<RationalFunction>(n, RationalFunction::zero(chart)));
        for (const auto& [idx, value] : entries) {
            auto [i, j] = idx;
            if (i < 0 || j < 0 || i >= static_cast<int>(n) || j >= static_cast<int>(n) || i == j)
                throw chart_error("form entry index out of range");
            if (!m[i][j].is_zero() && m[i][j] != value)
                throw error("conflicting form entries");
            m[i][j] = value;
            m[j][i] = -value;
        }
        return TwoForm(chart, std::move(m));
    }

    const Chart& chart() const { return chart_; }
    size_t dim() const { return chart_.size(); }
    const RFMatrix& matrix() const { return w_; }
    const RationalFunction& entry(int i, int j) const { return w_.at(i).at(j); }

    /// omega(X, Y) as a coordinate expression.
    RationalFunction evaluate_on(const VectorField& x, const VectorField& y) const {
        if (x.chart != chart_ || y.chart != chart_) throw chart_error("chart mismatch");
        RationalFunction acc = RationalFunction::zero(chart_);
        for (size_t i = 0; i < dim(); ++i)
            for (size_t j = 0; j < dim(); ++j) {
                if (i == j || w_[i][j].is_zero()) continue;
                acc += w_[i][j] * x.components[i] * y.components[j];
            }
        return acc;
    }

private:
    void validate() const {
        size_t n = chart_.size();
        if (w_.size() != n) throw chart_error("form rows != chart size");
        for (size_t i = 0; i < n; ++i) {
            if (w_[i].size() != n) throw chart_error("form matrix is not square");
            if (!w_[i][i].is_zero()) throw error("form diagonal must vanish");
            for (size_t j = 0; j < i; ++j)
                if (w_[i][j] != -w_[j][i]) throw error("form must be antisymmetric");
        }
    }

    Chart chart_;
    RFMatrix w_;
};

struct OneForm {
    Chart chart;
    std::vector<RationalFunction> components;

    OneForm(Chart c, std::vector<RationalFunction> comps)
        : chart(std::move(c)), components(std::move(comps)) {
        if (components.size() != chart.size())
            throw chart_error("one-form component count != chart size");
    }
};

/// Rational map between charts: one source-variable expression per target coordinate.
class RationalMap {
public:
    RationalMap(Chart source, Chart target, std::vector<RationalFunction> components)
        : source_(std::move(source)), target_(std::move(target)),
          components_(std::move(components)) {
        if (components_.size() != target_.size())
            throw chart_error("map component count != target chart size");
        for (const auto& f : components_)
            if (f.chart() != source_) throw chart_error("map component not on source chart");
    }

    static RationalMap identity(const Chart& chart) {
        std::vector<RationalFunction> comps;
        for (const auto& name : chart) comps.push_back(RationalFunction::variable(chart, name));
        return RationalMap(chart, chart, comps);
    }

    const Chart& source() const { return source_; }
    const Chart& target() const { return target_; }
    const std::vector<RationalFunction>& components() const { return components_; }

    /// Composition f o m for f on the target chart.
    RationalFunction pull_function(const RationalFunction& f) const {
        if (f.chart() != target_) throw chart_error("function not on the map's target chart");
        return f.substitute(components_);
    }

    /// Jacobian d m_i / d s_a, rows = target coords, columns = source coords.
    RFMatrix jacobian() const {
        RFMatrix j(components_.size(),
                   std::vector<RationalFunction>(source_.size(), RationalFunction::zero(source_)));
        for (size_t i = 0; i < components_.size(); ++i)
            for (size_t a = 0; a < source_.size(); ++a)
                j[i][a] = components_[i].derivative(static_cast<int>(a));
        return j;
    }

    std::vector<double> evaluate_double(const std::vector<double>& point) const {
        std::vector<double> out;
        out.reserve(components_.size());
        for (const auto& f : components_) out.push_back(f.evaluate_double(point));
        return out;
    }

private:
    Chart source_;
    Chart target_;
    std::vector<RationalFunction> components_;
};

// ---------------------------------------------------------------------------
// Fraction-free linear algebra over the polynomial ring (Bareiss elimination).
// ---------------------------------------------------------------------------
namespace detail {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

inline MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly::zero(a.chart());
    return integer_primitive(exact_divide(a * b, poly_gcd(a, b)));
}

/// Clears denominators: returns (B, D) with entries A[i][j] = B[i][j] / D.
inline std::pair<PolyMatrix, MultiPoly> clear_denominators(const RFMatrix& a, const Chart& chart) {
    MultiPoly d = MultiPoly::constant(chart, Rational(1));
    for (const auto& row : a)
        for (const auto& e : row) d = poly_lcm(d, e.denominator());
    PolyMatrix b(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (const auto& e : a[i])
            b[i].push_back(e.numerator() * exact_divide(d, e.denominator()));
    return {std::move(b), std::move(d)};
}

/// Bareiss fraction-free determinant; all interior divisions are exact.
inline MultiPoly bareiss_determinant(PolyMatrix m, const Chart& chart) {
    size_t n = m.size();
    if (n == 0) return MultiPoly::constant(chart, Rational(1));
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(chart, Rational(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MultiPoly::zero(chart);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

inline PolyMatrix minor_matrix(const PolyMatrix& m, size_t row, size_t col) {
    PolyMatrix out;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i == row) continue;
        std::vector<MultiPoly> r;
        for (size_t j = 0; j < m.size(); ++j)
            if (j != col) r.push_back(m[i][j]);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace detail

/// Symbolic determinant over the rational-function field, up to a nonzero
/// rational-function factor irrelevant for degeneracy decisions.
inline RationalFunction symbolic_determinant(const RFMatrix& a, const Chart& chart) {
    auto [b, d] = detail::clear_denominators(a, chart);
    MultiPoly det_b = detail::bareiss_determinant(std::move(b), chart);
    MultiPoly den = MultiPoly::constant(chart, Rational(1));
    for (size_t k = 0; k < a.size(); ++k) den = den * d;
    return RationalFunction(det_b, den);
}

/// Inverse over the rational-function field via Bareiss determinants of minors.
inline RFMatrix symbolic_inverse(const RFMatrix& a, const Chart& chart) {
    size_t n = a.size();
    auto [b, d] = detail::clear_denominators(a, chart);
    MultiPoly det_b = detail::bareiss_determinant(b, chart);
    if (det_b.is_zero()) throw singular_error("matrix is identically singular");
    RFMatrix inv(n, std::vector<RationalFunction>(n, RationalFunction::zero(chart)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            MultiPoly cof = detail::bareiss_determinant(detail::minor_matrix(b, j, i), chart);
            if ((i + j) % 2 == 1) cof = -cof;
            // A^{-1} = D * B^{-1} = D * adj(B) / det(B)
            inv[i][j] = RationalFunction(cof * d, det_b);
        }
    }
    return inv;
}

// ---------------------------------------------------------------------------
// Structure inversion and form calculus.
// ---------------------------------------------------------------------------

/// omega matrix = transpose of the inverse of the pi matrix, so that the pair
/// satisfies X_H -| omega = dH with the bracket convention of this library.
inline TwoForm invert_structure(const PoissonStructure& p) {
    if (p.dim() % 2 != 0) throw singular_error("odd-dimensional bivector is degenerate");
    RFMatrix inv = symbolic_inverse(p.bivector(), p.chart());
    size_t n = p.dim();
    RFMatrix w(n, std::vector<RationalFunction>(n, RationalFunction::zero(p.chart())));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) w[i][j] = inv[j][i];
    return TwoForm(p.chart(), std::move(w));
}

inline PoissonStructure invert_structure(const TwoForm& w) {
    if (w.dim() % 2 != 0) throw singular_error("odd-dimensional form is degenerate");
    RFMatrix inv = symbolic_inverse(w.matrix(), w.chart());
    size_t n = w.dim();
    RFMatrix pi(n, std::vector<RationalFunction>(n, RationalFunction::zero(w.chart())));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) pi[i][j] = inv[j][i];
    return PoissonStructure(w.chart(), std::move(pi));
}

struct TwoFormReport {
    std::map<IndexTriple, RationalFunction> closedness_residuals;
    bool closed = true;
    RationalFunction determinant;
    bool nondegenerate = false;
};

/// Closedness residual per triple i<j<k: d_i w_{jk} + d_j w_{ki} + d_k w_{ij};
/// non-degeneracy via the symbolic determinant.
inline TwoFormReport two_form_checks(const TwoForm& w) {
    int n = static_cast<int>(w.dim());
    TwoFormReport report{{}, true, symbolic_determinant(w.matrix(), w.chart()), false};
    report.nondegenerate = !report.determinant.is_zero();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                RationalFunction r = w.entry(j, k).derivative(i) +
                                     w.entry(k, i).derivative(j) +
                                     w.entry(i, j).derivative(k);
                if (!r.is_zero()) report.closed = false;
                report.closedness_residuals.emplace(IndexTriple{i, j, k}, std::move(r));
            }
    return report;
}

/// (m*w)_{ab} = sum_{i<j} (w_{ij} o m) (dm_i/ds_a dm_j/ds_b - dm_i/ds_b dm_j/ds_a).
inline TwoForm pullback_two_form(const RationalMap& m, const TwoForm& w) {
    if (w.chart() != m.target()) throw chart_error("form chart != map target chart");
    size_t ns = m.source().size();
    size_t nt = m.target().size();
    RFMatrix jac = m.jacobian();
    RFMatrix out(ns, std::vector<RationalFunction>(ns, RationalFunction::zero(m.source())));
    for (size_t i = 0; i < nt; ++i) {
        for (size_t j = i + 1; j < nt; ++j) {
            if (w.entry(static_cast<int>(i), static_cast<int>(j)).is_zero()) continue;
            RationalFunction wij = m.pull_function(w.entry(static_cast<int>(i), static_cast<int>(j)));
            for (size_t a = 0; a < ns; ++a)
                for (size_t b = a + 1; b < ns; ++b) {
                    RationalFunction term =
                        wij * (jac[i][a] * jac[j][b] - jac[i][b] * jac[j][a]);
                    out[a][b] += term;
                    out[b][a] -= term;
                }
        }
    }
    return TwoForm(m.source(), std::move(out));
}

namespace detail {

/// (m*rho)_a = sum_i (rho_i o m) dm_i/ds_a; helper for the d-commutes test.
inline OneForm pullback_one_form(const RationalMap& m, const OneForm& rho) {
    if (rho.chart != m.target()) throw chart_error("one-form chart != map target chart");
    RFMatrix jac = m.jacobian();
    std::vector<RationalFunction> out(m.source().size(), RationalFunction::zero(m.source()));
    for (size_t i = 0; i < rho.components.size(); ++i) {
        if (rho.components[i].is_zero()) continue;
        RationalFunction ri = m.pull_function(rho.components[i]);
        for (size_t a = 0; a < out.size(); ++a) out[a] += ri * jac[i][a];
    }
    return OneForm(m.source(), std::move(out));
}

}  // namespace detail

/// (d rho)_{ij} = d_i rho_j - d_j rho_i.
inline TwoForm exterior_derivative_one_form(const OneForm& rho) {
    size_t n = rho.chart.size();
    RFMatrix out(n, std::vector<RationalFunction>(n, RationalFunction::zero(rho.chart)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            RationalFunction r = rho.components[j].derivative(static_cast<int>(i)) -
                                 rho.components[i].derivative(static_cast<int>(j));
            out[i][j] = r;
            out[j][i] = -r;
        }
    return TwoForm(rho.chart, std::move(out));
}

/// Chart (q_1..q_n, p_1..p_n), rho = sum p_i dq_i, omega = d rho.
inline std::pair<OneForm, TwoForm> canonical_cotangent_structure(int n) {
    if (n < 1) throw error("need at least one degree of freedom");
    Chart chart;
    for (int i = 1; i <= n; ++i) chart.push_back("q" + std::to_string(i));
    for (int i = 1; i <= n; ++i) chart.push_back("p" + std::to_string(i));
    std::vector<RationalFunction> comps(chart.size(), RationalFunction::zero(chart));
    for (int i = 0; i < n; ++i)
        comps[static_cast<size_t>(i)] = RationalFunction::variable(chart, chart[static_cast<size_t>(n + i)]);
    OneForm rho(chart, std::move(comps));
    TwoForm omega = exterior_derivative_one_form(rho);
    return {std::move(rho), std::move(omega)};
}

// ---------------------------------------------------------------------------
// Unit sphere in stereographic charts: the worked example of this module.
// ---------------------------------------------------------------------------

/// omega_bar = x dy^dz + y dz^dx + z dx^dy on R^3, both stereographic chart
/// inverses, and the chart transition on the overlap.
struct SphereFixture {
    TwoForm ambient_form;
    RationalMap north_inverse;       // (u,v) -> (x,y,z), away from the north pole image
    RationalMap south_inverse;
    RationalMap north_to_south;      // transition (u,v) |-> (u,v)/(u^2+v^2)

    static SphereFixture make() {
        const Chart xyz = {"x", "y", "z"};
        const Chart uv = {"u", "v"};
        TwoForm ambient = TwoForm::from_entries(
            xyz, {{{1, 2}, parse_expression("x", xyz)},
                  {{2, 0}, parse_expression("y", xyz)},
                  {{0, 1}, parse_expression("z", xyz)}});
        std::vector<RationalFunction> north = {
            parse_expression("2*u/(1+u^2+v^2)", uv),
            parse_expression("2*v/(1+u^2+v^2)", uv),
            parse_expression("(u^2+v^2-1)/(1+u^2+v^2)", uv)};
        std::vector<RationalFunction> south = {
            parse_expression("2*u/(1+u^2+v^2)", uv),
            parse_expression("2*v/(1+u^2+v^2)", uv),
            parse_expression("-(u^2+v^2-1)/(1+u^2+v^2)", uv)};
        std::vector<RationalFunction> trans = {parse_expression("u/(u^2+v^2)", uv),
                                               parse_expression("v/(u^2+v^2)", uv)};
        return SphereFixture{std::move(ambient),
                             RationalMap(uv, xyz, std::move(north)),
                             RationalMap(uv, xyz, std::move(south)),
                             RationalMap(uv, uv, std::move(trans))};
    }

    /// Chart coefficient commonly quoted for this example in the literature;
    /// the symbolic pullback derives a squared denominator instead. Kept for
    /// side-by-side reporting, never asserted as the truth.
    static RationalFunction quoted_chart_coefficient() {
        return parse_expression("-4/(1+u^2+v^2)", {"u", "v"});
    }
};

}  // namespace poisgeo
