#pragma once

#include <complex>
#include <string>

#include "poisgeo/lie_algebra.hpp"
#include "poisgeo/numeric.hpp"

namespace poisgeo {

/// The two built-in matrix realizations for group-level numerics.
enum class MatrixGroup { so3_exp, su2_exp };

inline MatrixGroup matrix_group_from_name(const std::string& name) {
    if (name == "so3-exp" || name == "so3") return MatrixGroup::so3_exp;
    if (name == "su2-exp" || name == "su2") return MatrixGroup::su2_exp;
    throw error("unsupported group tag: " + name);
}

inline const LieAlgebraSC& group_algebra(MatrixGroup g) {
    static const LieAlgebraSC so3 = algebra_catalog("so3");
    static const LieAlgebraSC su2 = algebra_catalog("su2");
    return g == MatrixGroup::so3_exp ? so3 : su2;
}

/// ad(X) as a double matrix for X = sum x_a e_a.
inline Mat ad_matrix_numeric(const LieAlgebraSC& g, const Vec& x) {
    int n = g.dim();
    Mat out(static_cast<size_t>(n), Vec(static_cast<size_t>(n), 0.0));
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int i = 0; i < n; ++i) acc += x[static_cast<size_t>(i)] * g.c(i, j, k).to_double();
            out[static_cast<size_t>(k)][static_cast<size_t>(j)] = acc;
        }
    return out;
}

/// ad*(X) = -ad(X)^T as a double matrix.
inline Mat ad_star_matrix_numeric(const LieAlgebraSC& g, const Vec& x) {
    Mat ad = ad_matrix_numeric(g, x);
    Mat out = mat_transpose(ad);
    for (auto& row : out)
        for (double& v : row) v = -v;
    return out;
}

/// Ad_{exp(X)} = exp(ad X) on coordinates; for both built-in groups ad X is
/// an antisymmetric 3x3 matrix, so the closed Rodrigues form applies.
inline Mat adjoint_of_exp(MatrixGroup group, const Vec& x) {
    return exp_antisymmetric3(ad_matrix_numeric(group_algebra(group), x));
}

/// Ad*_{exp(X)} xi = exp(ad*(X)) xi, by the matrix exponential of ad*.
inline Vec coadjoint_action_numeric(MatrixGroup group, const Vec& x, const Vec& xi) {
    const LieAlgebraSC& g = group_algebra(group);
    if (static_cast<int>(x.size()) != g.dim() || static_cast<int>(xi.size()) != g.dim())
        throw error("coadjoint action: wrong vector size");
    return mat_apply(exp_antisymmetric3(ad_star_matrix_numeric(g, x)), xi);
}

inline Vec coadjoint_action_numeric(const std::string& group, const Vec& x, const Vec& xi) {
    return coadjoint_action_numeric(matrix_group_from_name(group), x, xi);
}

// ---------------------------------------------------------------------------
// Independent 2x2 realization of the su2 exponential, used as a cross-check
// for the Rodrigues path: exp(sum x_a (-i sigma_a)) acting by conjugation.
// ---------------------------------------------------------------------------
namespace detail {

using C2 = std::array<std::array<std::complex<double>, 2>, 2>;

inline C2 c2_mul(const C2& a, const C2& b) {
    C2 out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return out;
}

inline C2 su2_basis_element(int a) {
    const std::complex<double> I(0.0, 1.0);
    switch (a) {
        case 0: return {{{0.0, -I}, {-I, 0.0}}};                        // -i sigma_1
        case 1: return {{{0.0, -1.0}, {1.0, 0.0}}};                     // -i sigma_2
        default: return {{{-I, 0.0}, {0.0, I}}};                        // -i sigma_3
    }
}

inline C2 su2_exp(const Vec& x) {
    double theta = vec_norm(x);
    C2 out{};
    out[0][0] = std::cos(theta);
    out[1][1] = std::cos(theta);
    if (theta > 1e-300) {
        double s = std::sin(theta) / theta;
        for (int a = 0; a < 3; ++a) {
            C2 e = su2_basis_element(a);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) out[i][j] += s * x[static_cast<size_t>(a)] * e[i][j];
        }
    }
    return out;
}

/// Ad_{exp(x)} from the 2x2 picture: columns of g e_b g^{-1} in the basis.
inline Mat su2_adjoint_via_2x2(const Vec& x) {
    C2 g = su2_exp(x);
    // unitary with det 1: inverse = conjugate transpose
    C2 ginv{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) ginv[i][j] = std::conj(g[j][i]);
    Mat out(3, Vec(3, 0.0));
    for (int b = 0; b < 3; ++b) {
        C2 conj_b = c2_mul(c2_mul(g, su2_basis_element(b)), ginv);
        // expand in e_a: coefficient = tr(conj_b e_a^dagger) / tr(e_a e_a^dagger)
        for (int a = 0; a < 3; ++a) {
            C2 ea = su2_basis_element(a);
            std::complex<double> num = 0.0, den = 0.0;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    num += conj_b[i][j] * std::conj(ea[i][j]);
                    den += ea[i][j] * std::conj(ea[i][j]);
                }
            out[static_cast<size_t>(a)][static_cast<size_t>(b)] = (num / den).real();
        }
    }
    return out;
}

}  // namespace detail

}  // namespace poisgeo
