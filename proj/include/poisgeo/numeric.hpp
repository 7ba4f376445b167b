#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace poisgeo {

using Vec = std::vector<double>;
using Mat = std::vector<std::vector<double>>;

inline Mat mat_identity(size_t n) {
    Mat m(n, Vec(n, 0.0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1.0;
    return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    size_t n = a.size(), m = b[0].size(), k = b.size();
    Mat out(n, Vec(m, 0.0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            double v = a[i][l];
            if (v == 0.0) continue;
            for (size_t j = 0; j < m; ++j) out[i][j] += v * b[l][j];
        }
    return out;
}

inline Vec mat_apply(const Mat& a, const Vec& x) {
    Vec out(a.size(), 0.0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
    return out;
}

inline Mat mat_transpose(const Mat& a) {
    Mat out(a[0].size(), Vec(a.size(), 0.0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
    return out;
}

inline double vec_norm(const Vec& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

inline double vec_dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline Vec vec_scale(const Vec& a, double s) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
    return out;
}

/// Rotation exp(skew(w)) by Rodrigues' formula; skew(w) v = w x v.
inline Mat rodrigues(const Vec& w) {
    double theta = vec_norm(w);
    Mat r = mat_identity(3);
    if (theta < 1e-300) return r;
    double ux = w[0] / theta, uy = w[1] / theta, uz = w[2] / theta;
    double c = std::cos(theta), s = std::sin(theta), t = 1.0 - c;
    r[0][0] = c + ux * ux * t;
    r[0][1] = ux * uy * t - uz * s;
    r[0][2] = ux * uz * t + uy * s;
    r[1][0] = uy * ux * t + uz * s;
    r[1][1] = c + uy * uy * t;
    r[1][2] = uy * uz * t - ux * s;
    r[2][0] = uz * ux * t - uy * s;
    r[2][1] = uz * uy * t + ux * s;
    r[2][2] = c + uz * uz * t;
    return r;
}

/// exp(A) for antisymmetric 3x3 A (decomposed as skew(w)).
inline Mat exp_antisymmetric3(const Mat& a, double tol = 1e-12) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (std::abs(a[i][j] + a[j][i]) > tol)
                throw std::invalid_argument("matrix is not antisymmetric");
    return rodrigues({a[2][1], a[0][2], a[1][0]});
}

/// Eigenvalues of a symmetric matrix by the cyclic Jacobi method.
inline Vec symmetric_eigenvalues(Mat a, int sweeps = 64) {
    size_t n = a.size();
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        double off = 0.0;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-30) break;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (size_t k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (size_t k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    Vec eig(n);
    for (size_t i = 0; i < n; ++i) eig[i] = a[i][i];
    return eig;
}

/// Singular values (descending) via eigenvalues of J J^T.
inline Vec singular_values(const Mat& j) {
    Mat jt = mat_transpose(j);
    Mat g = mat_mul(j, jt);
    Vec eig = symmetric_eigenvalues(g);
    for (double& v : eig) v = std::sqrt(std::max(0.0, v));
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
}

/// Numeric rank against an absolute singular-value threshold.
inline int numeric_rank(const Mat& j, double tol) {
    int r = 0;
    for (double s : singular_values(j))
        if (s > tol) ++r;
    return r;
}

}  // namespace poisgeo
