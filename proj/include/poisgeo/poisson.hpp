#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "poisgeo/ratfunc.hpp"

namespace poisgeo {

using RFMatrix = std::vector<std::vector<RationalFunction>>;

/// Poisson bivector in coordinates. Entries pi^{ij} = {z_i, z_j}; the matrix
/// is antisymmetric with zero diagonal, enforced at construction.
class PoissonStructure {
public:
    PoissonStructure(Chart chart, RFMatrix bivector)
        : chart_(std::move(chart)), pi_(std::move(bivector)) {
        validate();
    }

    /// Builds from strictly-upper (or cyclic) entries; omitted entries are zero.
    /// Keys are 0-based (i, j) pairs with i != j.
    static PoissonStructure from_entries(
        const Chart& chart, const std::map<std::pair<int, int>, RationalFunction>& entries) {
        size_t n = chart.size();
        RFMatrix m(n, std::vector<RationalFunction>(n, RationalFunction::zero(chart)));
        for (const auto& [idx, value] : entries) {
            auto [i, j] = idx;
            if (i < 0 || j < 0 || i >= static_cast<int>(n) || j >= static_cast<int>(n) || i == j)
                throw chart_error("bivector entry index out of range");
            if (!m[i][j].is_zero() && m[i][j] != value)
                throw error("conflicting bivector entries");
            m[i][j] = value;
            m[j][i] = -value;
        }
        return PoissonStructure(chart, std::move(m));
    }

    const Chart& chart() const { return chart_; }
    size_t dim() const { return chart_.size(); }
    const RFMatrix& bivector() const { return pi_; }
    const RationalFunction& entry(int i, int j) const { return pi_.at(i).at(j); }

    void require_chart(const RationalFunction& f) const {
        if (f.chart() != chart_) throw chart_error("function chart differs from structure chart");
    }

private:
    void validate() const {
        size_t n = chart_.size();
        if (pi_.size() != n) throw chart_error("bivector rows != chart size");
        for (size_t i = 0; i < n; ++i) {
            if (pi_[i].size() != n) throw chart_error("bivector is not square");
            if (!pi_[i][i].is_zero()) throw error("bivector diagonal must vanish");
            for (size_t j = 0; j < i; ++j)
                if (pi_[i][j] != -pi_[j][i]) throw error("bivector must be antisymmetric");
        }
    }

    Chart chart_;
    RFMatrix pi_;
};

/// Polynomial/rational vector field: one component per chart coordinate.
struct VectorField {
    Chart chart;
    std::vector<RationalFunction> components;

    VectorField(Chart c, std::vector<RationalFunction> comps)
        : chart(std::move(c)), components(std::move(comps)) {
        if (components.size() != chart.size())
            throw chart_error("vector field component count != chart size");
    }

    static VectorField zero(const Chart& c) {
        return VectorField(c, std::vector<RationalFunction>(c.size(), RationalFunction::zero(c)));
    }

    bool is_zero() const {
        for (const auto& f : components)
            if (!f.is_zero()) return false;
        return true;
    }

    /// Directional derivative X(f).
    RationalFunction apply(const RationalFunction& f) const {
        if (f.chart() != chart) throw chart_error("chart mismatch in field application");
        RationalFunction acc = RationalFunction::zero(chart);
        for (size_t i = 0; i < components.size(); ++i)
            acc += components[i] * f.derivative(static_cast<int>(i));
        return acc;
    }

    friend VectorField operator+(const VectorField& a, const VectorField& b) {
        if (a.chart != b.chart) throw chart_error("chart mismatch");
        std::vector<RationalFunction> c;
        c.reserve(a.components.size());
        for (size_t i = 0; i < a.components.size(); ++i)
            c.push_back(a.components[i] + b.components[i]);
        return VectorField(a.chart, std::move(c));
    }

    friend VectorField operator-(const VectorField& a, const VectorField& b) {
        if (a.chart != b.chart) throw chart_error("chart mismatch");
        std::vector<RationalFunction> c;
        c.reserve(a.components.size());
        for (size_t i = 0; i < a.components.size(); ++i)
            c.push_back(a.components[i] - b.components[i]);
        return VectorField(a.chart, std::move(c));
    }

    VectorField operator-() const {
        std::vector<RationalFunction> c;
        c.reserve(components.size());
        for (const auto& f : components) c.push_back(-f);
        return VectorField(chart, std::move(c));
    }

    friend bool operator==(const VectorField& a, const VectorField& b) {
        return a.chart == b.chart && a.components == b.components;
    }
};

/// [X,Y]^i = X(Y^i) - Y(X^i), componentwise on coordinate expressions.
inline VectorField commutator(const VectorField& x, const VectorField& y) {
    if (x.chart != y.chart) throw chart_error("chart mismatch in commutator");
    std::vector<RationalFunction> c;
    c.reserve(x.components.size());
    for (size_t i = 0; i < x.components.size(); ++i)
        c.push_back(x.apply(y.components[i]) - y.apply(x.components[i]));
    return VectorField(x.chart, std::move(c));
}

/// {F,G} = sum_{i,j} pi^{ij} dF/dz_i dG/dz_j.
inline RationalFunction bracket(const RationalFunction& f, const RationalFunction& g,
                                const PoissonStructure& p) {
    p.require_chart(f);
    p.require_chart(g);
    size_t n = p.dim();
    std::vector<RationalFunction> df, dg;
    df.reserve(n);
    dg.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        df.push_back(f.derivative(static_cast<int>(i)));
        dg.push_back(g.derivative(static_cast<int>(i)));
    }
    RationalFunction acc = RationalFunction::zero(p.chart());
    for (size_t i = 0; i < n; ++i) {
        if (df[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (i == j || dg[j].is_zero() || p.entry(i, j).is_zero()) continue;
            acc += p.entry(static_cast<int>(i), static_cast<int>(j)) * df[i] * dg[j];
        }
    }
    return acc;
}

/// X_H with X_H^i = sum_j pi^{ij} dH/dz_j, so that X_H(G) = {G,H}.
inline VectorField hamiltonian_vector_field(const RationalFunction& h,
                                            const PoissonStructure& p) {
    p.require_chart(h);
    size_t n = p.dim();
    std::vector<RationalFunction> dh;
    dh.reserve(n);
    for (size_t i = 0; i < n; ++i) dh.push_back(h.derivative(static_cast<int>(i)));
    std::vector<RationalFunction> comps;
    comps.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        RationalFunction acc = RationalFunction::zero(p.chart());
        for (size_t j = 0; j < n; ++j) {
            if (i == j || dh[j].is_zero()) continue;
            acc += p.entry(static_cast<int>(i), static_cast<int>(j)) * dh[j];
        }
        comps.push_back(std::move(acc));
    }
    return VectorField(p.chart(), std::move(comps));
}

/// (pi#alpha)^i = sum_j pi^{ij} alpha_j; sharp_apply(dH) == hamiltonian_vector_field(H).
inline VectorField sharp_apply(const std::vector<RationalFunction>& alpha,
                               const PoissonStructure& p) {
    if (alpha.size() != p.dim()) throw chart_error("covector length != chart size");
    size_t n = p.dim();
    std::vector<RationalFunction> comps;
    comps.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        RationalFunction acc = RationalFunction::zero(p.chart());
        for (size_t j = 0; j < n; ++j) {
            if (i == j || alpha[j].is_zero()) continue;
            acc += p.entry(static_cast<int>(i), static_cast<int>(j)) * alpha[j];
        }
        comps.push_back(std::move(acc));
    }
    return VectorField(p.chart(), std::move(comps));
}

using IndexTriple = std::array<int, 3>;

/// Jacobi residuals of Eq.-style cyclic sums, one per unordered triple i<j<k.
struct JacobiReport {
    std::map<IndexTriple, RationalFunction> residuals;
    bool is_poisson = true;

    std::vector<IndexTriple> failing_triples() const {
        std::vector<IndexTriple> out;
        for (const auto& [t, r] : residuals)
            if (!r.is_zero()) out.push_back(t);
        return out;
    }
};

/// residual(i,j,k) = sum_l [ pi^{il} d_l pi^{jk} + pi^{jl} d_l pi^{ki} + pi^{kl} d_l pi^{ij} ].
inline JacobiReport jacobi_residual(const PoissonStructure& p) {
    JacobiReport report;
    int n = static_cast<int>(p.dim());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                RationalFunction acc = RationalFunction::zero(p.chart());
                for (int l = 0; l < n; ++l) {
                    acc += p.entry(i, l) * p.entry(j, k).derivative(l);
                    acc += p.entry(j, l) * p.entry(k, i).derivative(l);
                    acc += p.entry(k, l) * p.entry(i, j).derivative(l);
                }
                if (!acc.is_zero()) report.is_poisson = false;
                report.residuals.emplace(IndexTriple{i, j, k}, std::move(acc));
            }
        }
    }
    return report;
}

/// True iff {f, z_j} vanishes identically for every coordinate z_j.
inline bool casimir_check(const RationalFunction& f, const PoissonStructure& p) {
    p.require_chart(f);
    for (size_t j = 0; j < p.dim(); ++j) {
        RationalFunction zj = RationalFunction::variable(p.chart(), p.chart()[j]);
        if (!bracket(f, zj, p).is_zero()) return false;
    }
    return true;
}

/// Lie derivative of the bivector along X, componentwise:
/// (L_X pi)^{ij} = X(pi^{ij}) - pi^{kj} d_k X^i - pi^{ik} d_k X^j.
inline RFMatrix bivector_lie_derivative(const VectorField& x, const PoissonStructure& p) {
    if (x.chart != p.chart()) throw chart_error("chart mismatch");
    int n = static_cast<int>(p.dim());
    RFMatrix out(n, std::vector<RationalFunction>(n, RationalFunction::zero(p.chart())));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            RationalFunction acc = x.apply(p.entry(i, j));
            for (int k = 0; k < n; ++k) {
                acc -= p.entry(k, j) * x.components[static_cast<size_t>(i)].derivative(k);
                acc -= p.entry(i, k) * x.components[static_cast<size_t>(j)].derivative(k);
            }
            out[i][j] = std::move(acc);
        }
    }
    return out;
}

/// Canonical structure on (q_1..q_n, p_1..p_n) with {q_i, p_i} = 1.
inline PoissonStructure canonical_structure(int n) {
    if (n < 1) throw error("canonical structure needs n >= 1");
    Chart chart;
    for (int i = 1; i <= n; ++i) chart.push_back("q" + std::to_string(i));
    for (int i = 1; i <= n; ++i) chart.push_back("p" + std::to_string(i));
    std::map<std::pair<int, int>, RationalFunction> entries;
    for (int i = 0; i < n; ++i)
        entries.emplace(std::make_pair(i, n + i), RationalFunction::constant(chart, Rational(1)));
    return PoissonStructure::from_entries(chart, entries);
}

}  // namespace poisgeo
