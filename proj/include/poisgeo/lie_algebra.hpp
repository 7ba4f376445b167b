#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "poisgeo/poisson.hpp"

namespace poisgeo {

using RatMatrix = std::vector<std::vector<Rational>>;
using RatVector = std::vector<Rational>;

/// Raw structure-constant entries C^k_{ij}; duplicates must be consistent.
struct StructureConstantEntry {
    int i, j, k;
    Rational value;
};

struct StructureJacobiReport {
    bool ok = true;
    // (i,j,k,l) -> nonzero residual of the quadratic Jacobi identity
    std::vector<std::tuple<int, int, int, int, Rational>> violations;
};

/// Finite-dimensional Lie algebra given by exact structure constants
/// [e_i, e_j] = sum_k C^k_{ij} e_k, stored sparsely on i < j.
class LieAlgebraSC {
public:
    LieAlgebraSC(std::vector<std::string> basis_names,
                 std::vector<StructureConstantEntry> entries, bool verify = true)
        : basis_(std::move(basis_names)) {
        int n = dim();
        for (const auto& e : entries) {
            if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= n || e.j >= n || e.k >= n)
                throw error("structure constant index out of range");
            if (e.i == e.j) {
                if (!e.value.is_zero()) throw error("C^k_{ii} must vanish (antisymmetry)");
                continue;
            }
            Rational canonical = (e.i < e.j) ? e.value : -e.value;
            std::array<int, 3> key = {std::min(e.i, e.j), std::max(e.i, e.j), e.k};
            auto it = c_.find(key);
            if (it != c_.end()) {
                if (it->second != canonical)
                    throw error("conflicting or non-antisymmetric structure constants");
            } else {
                c_.emplace(key, canonical);
            }
        }
        std::erase_if(c_, [](const auto& kv) { return kv.second.is_zero(); });
        if (verify) {
            auto rep = jacobi_report();
            if (!rep.ok) throw error("structure constants violate the Jacobi identity");
        }
    }

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::string>& basis_names() const { return basis_; }

    /// C^k_{ij} with antisymmetric completion.
    Rational c(int i, int j, int k) const {
        if (i == j) return Rational(0);
        std::array<int, 3> key = {std::min(i, j), std::max(i, j), k};
        auto it = c_.find(key);
        if (it == c_.end()) return Rational(0);
        return (i < j) ? it->second : -it->second;
    }

    const std::map<std::array<int, 3>, Rational>& sparse_constants() const { return c_; }

    /// [x, y]_k = sum_{i,j} C^k_{ij} x_i y_j on coordinate vectors.
    RatVector bracket(const RatVector& x, const RatVector& y) const {
        int n = dim();
        RatVector out(static_cast<size_t>(n), Rational(0));
        for (const auto& [key, value] : c_) {
            auto [i, j, k] = key;
            out[static_cast<size_t>(k)] +=
                value * (x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)] -
                         x[static_cast<size_t>(j)] * y[static_cast<size_t>(i)]);
        }
        return out;
    }

    StructureJacobiReport jacobi_report() const {
        StructureJacobiReport rep;
        int n = dim();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        Rational acc(0);
                        for (int m = 0; m < n; ++m)
                            acc += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) +
                                   c(k, i, m) * c(m, j, l);
                        if (!acc.is_zero()) {
                            rep.ok = false;
                            rep.violations.emplace_back(i, j, k, l, acc);
                        }
                    }
        return rep;
    }

private:
    std::vector<std::string> basis_;
    std::map<std::array<int, 3>, Rational> c_;  // key (i<j, k)
};

/// Checks antisymmetry (by construction) and the quadratic Jacobi identity on
/// raw constants without requiring them to form a valid algebra.
inline StructureJacobiReport structure_jacobi_check(
    const std::vector<std::string>& basis_names,
    const std::vector<StructureConstantEntry>& entries) {
    LieAlgebraSC candidate(basis_names, entries, /*verify=*/false);
    return candidate.jacobi_report();
}

/// Linear Poisson structure on the dual: pi^{ij} = sum_k C^k_{ij} x_k.
inline PoissonStructure lie_poisson_structure(const LieAlgebraSC& g) {
    int n = g.dim();
    Chart chart = g.basis_names();
    RFMatrix pi(static_cast<size_t>(n),
                std::vector<RationalFunction>(static_cast<size_t>(n),
                                              RationalFunction::zero(chart)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            MultiPoly p(chart);
            for (int k = 0; k < n; ++k) {
                Rational v = g.c(i, j, k);
                if (v.is_zero()) continue;
                Exponents e(chart.size(), 0);
                e[static_cast<size_t>(k)] = 1;
                p.add_term(e, v);
            }
            pi[static_cast<size_t>(i)][static_cast<size_t>(j)] = RationalFunction(p);
            pi[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                -pi[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
    return PoissonStructure(chart, std::move(pi));
}

/// ad(e_i)_{kj} = C^k_{ij} and ad*(e_i) = -transpose(ad(e_i)).
struct RepMatrices {
    std::vector<RatMatrix> ad;
    std::vector<RatMatrix> ad_star;
};

inline RatMatrix rat_zero_matrix(int n) {
    return RatMatrix(static_cast<size_t>(n), RatVector(static_cast<size_t>(n), Rational(0)));
}

inline RatMatrix rat_matmul(const RatMatrix& a, const RatMatrix& b) {
    size_t n = a.size();
    RatMatrix out(n, RatVector(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

inline RatMatrix rat_sub(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) out[i][j] -= b[i][j];
    return out;
}

inline bool rat_is_zero(const RatMatrix& a) {
    for (const auto& row : a)
        for (const auto& v : row)
            if (!v.is_zero()) return false;
    return true;
}

inline RepMatrices rep_matrices(const LieAlgebraSC& g) {
    int n = g.dim();
    RepMatrices rep;
    for (int i = 0; i < n; ++i) {
        RatMatrix ad = rat_zero_matrix(n);
        RatMatrix ad_star = rat_zero_matrix(n);
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) {
                ad[static_cast<size_t>(k)][static_cast<size_t>(j)] = g.c(i, j, k);
                ad_star[static_cast<size_t>(j)][static_cast<size_t>(k)] = -g.c(i, j, k);
            }
        rep.ad.push_back(std::move(ad));
        rep.ad_star.push_back(std::move(ad_star));
    }
    return rep;
}

/// kappa_{ab} = trace(ad(e_a) ad(e_b)).
inline RatMatrix killing_form(const LieAlgebraSC& g) {
    auto rep = rep_matrices(g);
    int n = g.dim();
    RatMatrix kappa = rat_zero_matrix(n);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            Rational tr(0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    tr += rep.ad[static_cast<size_t>(a)][static_cast<size_t>(i)]
                                [static_cast<size_t>(j)] *
                          rep.ad[static_cast<size_t>(b)][static_cast<size_t>(j)]
                                [static_cast<size_t>(i)];
            kappa[static_cast<size_t>(a)][static_cast<size_t>(b)] = tr;
            kappa[static_cast<size_t>(b)][static_cast<size_t>(a)] = tr;
        }
    return kappa;
}

/// <xi, [X, Y]>: the orbit 2-form at xi evaluated on the generators X, Y.
/// Coincides with bracket(F_X, F_Y, lie_poisson_structure(g)) evaluated at xi.
inline Rational kks_eval(const RatVector& xi, const RatVector& x, const RatVector& y,
                         const LieAlgebraSC& g) {
    RatVector b = g.bracket(x, y);
    Rational acc(0);
    for (size_t k = 0; k < b.size(); ++k) acc += xi[k] * b[k];
    return acc;
}

/// Linear coordinate function F_X(xi) = <xi, X> on the dual chart.
inline RationalFunction evaluation_function(const LieAlgebraSC& g, const RatVector& x) {
    Chart chart = g.basis_names();
    MultiPoly p(chart);
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        Exponents e(chart.size(), 0);
        e[i] = 1;
        p.add_term(e, x[i]);
    }
    return RationalFunction(p);
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

/// so3 | su2 | sl2 | heisenberg3 | abelian(n).
inline LieAlgebraSC algebra_catalog(const std::string& name) {
    if (name == "so3") {
        return LieAlgebraSC({"X1", "X2", "X3"},
                            {{0, 1, 2, Rational(1)}, {1, 2, 0, Rational(1)}, {2, 0, 1, Rational(1)}});
    }
    if (name == "su2") {
        // anti-Hermitian Pauli-type basis e_a = -i sigma_a: [e_a, e_b] = 2 eps_{abc} e_c
        return LieAlgebraSC({"E1", "E2", "E3"},
                            {{0, 1, 2, Rational(2)}, {1, 2, 0, Rational(2)}, {2, 0, 1, Rational(2)}});
    }
    if (name == "sl2") {
        // basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
        return LieAlgebraSC({"h", "e", "f"},
                            {{0, 1, 1, Rational(2)}, {0, 2, 2, Rational(-2)}, {1, 2, 0, Rational(1)}});
    }
    if (name == "heisenberg3") {
        return LieAlgebraSC({"e1", "e2", "e3"}, {{0, 1, 2, Rational(1)}});
    }
    if (name.rfind("abelian(", 0) == 0 && name.back() == ')') {
        int n = std::stoi(name.substr(8, name.size() - 9));
        if (n < 1) throw error("abelian dimension must be positive");
        std::vector<std::string> basis;
        for (int i = 1; i <= n; ++i) basis.push_back("e" + std::to_string(i));
        return LieAlgebraSC(std::move(basis), {});
    }
    throw error("unknown catalog algebra: " + name);
}

/// kappa_abstract = ratio * (matrix-trace form tr(XY) in the defining
/// realization); absent when the algebra has no catalog matrix realization
/// or a vanishing Killing form.
inline std::optional<Rational> catalog_matrix_trace_ratio(const std::string& name) {
    if (name == "so3") return Rational(1);   // tr(X_a X_b) = -2 delta_ab already
    if (name == "su2") return Rational(4);   // tr(e_a e_b) = -2 delta_ab, kappa = -8 delta_ab
    if (name == "sl2") return Rational(4);   // defining 2x2 trace form
    return std::nullopt;
}

inline std::vector<std::string> catalog_names() {
    return {"so3", "su2", "sl2", "heisenberg3", "abelian(n)"};
}

}  // namespace poisgeo
