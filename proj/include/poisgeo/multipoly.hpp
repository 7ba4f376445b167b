#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "poisgeo/rational.hpp"

namespace poisgeo {

/// Ordered list of coordinate names; every symbolic value carries one.
using Chart = std::vector<std::string>;

using Exponents = std::vector<int>;

/// Graded-lexicographic term order: total degree first, then lex on exponents.
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

inline int chart_index(const Chart& chart, const std::string& name) {
    auto it = std::find(chart.begin(), chart.end(), name);
    if (it == chart.end()) throw chart_error("coordinate not in chart: " + name);
    return static_cast<int>(it - chart.begin());
}

/// Multivariate polynomial with exact rational coefficients over a fixed chart.
/// Terms map exponent vectors to nonzero coefficients; zero terms are never stored.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GradedLex>;

    explicit MultiPoly(Chart chart) : chart_(std::move(chart)) {}

    static MultiPoly zero(const Chart& chart) { return MultiPoly(chart); }

    static MultiPoly constant(const Chart& chart, Rational c) {
        MultiPoly p(chart);
        if (!c.is_zero()) p.terms_[Exponents(chart.size(), 0)] = std::move(c);
        return p;
    }

    static MultiPoly variable(const Chart& chart, const std::string& name) {
        return variable(chart, chart_index(chart, name));
    }

    static MultiPoly variable(const Chart& chart, int index) {
        MultiPoly p(chart);
        Exponents e(chart.size(), 0);
        e.at(index) = 1;
        p.terms_[e] = Rational(1);
        return p;
    }

    const Chart& chart() const { return chart_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw error("polynomial is not constant");
        return terms_.begin()->second;
    }

    int degree() const {
        return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
    }

    /// Degree in one variable.
    int degree_in(int index) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.at(index));
        return terms_.empty() ? -1 : d;
    }

    const Exponents& leading_exponents() const {
        if (terms_.empty()) throw error("zero polynomial has no leading term");
        return terms_.rbegin()->first;
    }

    const Rational& leading_coefficient() const {
        if (terms_.empty()) throw error("zero polynomial has no leading term");
        return terms_.rbegin()->second;
    }

    MultiPoly operator-() const {
        MultiPoly r(chart_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        require_same_chart(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        require_same_chart(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.require_same_chart(b);
        MultiPoly r(a.chart_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e = ea;
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly& operator*=(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

    MultiPoly pow(int n) const {
        if (n < 0) throw error("negative polynomial power");
        MultiPoly r = constant(chart_, Rational(1));
        MultiPoly base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    MultiPoly derivative(int index) const {
        MultiPoly r(chart_);
        for (const auto& [e, c] : terms_) {
            int k = e.at(index);
            if (k == 0) continue;
            Exponents d = e;
            d[index] -= 1;
            r.add_term(d, c * Rational(k));
        }
        return r;
    }

    MultiPoly derivative(const std::string& name) const {
        return derivative(chart_index(chart_, name));
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (point.size() != chart_.size()) throw chart_error("point size != chart size");
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    /// Approximate evaluation; the exact path is evaluate().
    double evaluate_double(const std::vector<double>& point) const {
        double acc = 0.0;
        for (const auto& [e, c] : terms_) {
            double t = c.to_double();
            for (size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.chart_ == b.chart_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // print highest term first
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational a = c.abs();
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            bool has_vars = total_degree(e) > 0;
            if (!has_vars || !(a == Rational(1))) {
                os << a.to_string();
                if (has_vars) os << "*";
            }
            bool first_var = true;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!first_var) os << "*";
                first_var = false;
                os << chart_[i];
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

    void require_same_chart(const MultiPoly& o) const {
        if (chart_ != o.chart_) throw chart_error("chart mismatch");
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    static int total_degree(const Exponents& e) {
        return std::accumulate(e.begin(), e.end(), 0);
    }

private:
    Chart chart_;
    TermMap terms_;
};

// ---------------------------------------------------------------------------
// GCD machinery: content/primitive-part Euclidean reduction, highest chart
// variable as the main variable at each level.
// ---------------------------------------------------------------------------

/// Exact division; throws if b does not divide a.
inline MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_chart(b);
    if (b.is_zero()) throw error("division by zero polynomial");
    if (b.is_constant()) return a * (Rational(1) / b.constant_value());
    MultiPoly rem = a;
    MultiPoly quot(a.chart());
    const auto& lb = b.leading_exponents();
    while (!rem.is_zero()) {
        const auto& lr = rem.leading_exponents();
        Exponents q(lr.size());
        for (size_t i = 0; i < q.size(); ++i) {
            q[i] = lr[i] - lb[i];
            if (q[i] < 0) throw error("inexact polynomial division");
        }
        Rational qc = rem.leading_coefficient() / b.leading_coefficient();
        MultiPoly qt(a.chart());
        qt.add_term(q, qc);
        quot += qt;
        rem -= qt * b;
    }
    return quot;
}

inline bool divides(const MultiPoly& b, const MultiPoly& a) {
    try {
        exact_divide(a, b);
        return true;
    } catch (const error&) {
        return false;
    }
}

namespace detail {

/// Scales to integer coprime coefficients with positive graded-lex leading one.
inline MultiPoly integer_primitive(const MultiPoly& p) {
    if (p.is_zero()) return p;
    BigInt den_lcm = 1;
    for (const auto& [e, c] : p.terms())
        den_lcm = boost::multiprecision::lcm(den_lcm, c.denominator());
    BigInt num_gcd = 0;
    for (const auto& [e, c] : p.terms())
        num_gcd = boost::multiprecision::gcd(num_gcd, c.numerator() * (den_lcm / c.denominator()));
    Rational scale(den_lcm, num_gcd);
    MultiPoly r = p * scale;
    if (r.leading_coefficient().sign() < 0) r *= Rational(-1);
    return r;
}

/// Coefficients of p viewed as univariate in chart variable `var`.
inline std::vector<MultiPoly> univariate_coefficients(const MultiPoly& p, int var) {
    int d = p.degree_in(var);
    std::vector<MultiPoly> coeffs(static_cast<size_t>(d + 1), MultiPoly::zero(p.chart()));
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e;
        int k = rest[var];
        rest[var] = 0;
        coeffs[static_cast<size_t>(k)].add_term(rest, c);
    }
    return coeffs;
}

inline MultiPoly from_univariate(const std::vector<MultiPoly>& coeffs, int var,
                                 const Chart& chart) {
    MultiPoly r(chart);
    MultiPoly x = MultiPoly::variable(chart, var);
    for (size_t k = 0; k < coeffs.size(); ++k) r += coeffs[k] * x.pow(static_cast<int>(k));
    return r;
}

inline std::vector<bool> used_variables(const MultiPoly& p) {
    std::vector<bool> used(p.chart().size(), false);
    for (const auto& [e, c] : p.terms())
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) used[i] = true;
    return used;
}

/// Pseudo-remainder lc(g)^(deg f - deg g + 1) * f mod g with respect to `var`.
inline MultiPoly pseudo_remainder(MultiPoly f, const MultiPoly& g, int var) {
    int dg = g.degree_in(var);
    int df0 = f.degree_in(var);
    auto gc = univariate_coefficients(g, var);
    const MultiPoly& lg = gc.back();
    MultiPoly x = MultiPoly::variable(f.chart(), var);
    int steps = 0;
    while (!f.is_zero() && f.degree_in(var) >= dg) {
        int df = f.degree_in(var);
        auto fc = univariate_coefficients(f, var);
        f = f * lg - fc.back() * x.pow(df - dg) * g;
        ++steps;
    }
    // normalize to the exact power the subresultant recurrences expect
    for (int k = steps; k < df0 - dg + 1; ++k) f *= lg;
    return f;
}

inline MultiPoly leading_coefficient_in(const MultiPoly& p, int var) {
    return univariate_coefficients(p, var).back();
}

/// Specializes all variables but `var` at small integers; empty on degree drop.
inline std::vector<Rational> specialize_univariate(const MultiPoly& p, int var, int salt) {
    static const int table[] = {3, -5, 7, -2, 11, 13, -17, 19};
    std::vector<Rational> coeffs(static_cast<size_t>(p.degree_in(var)) + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) {
        Rational v = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (static_cast<int>(i) == var) continue;
            Rational base(table[(i + static_cast<size_t>(salt)) % 8] + (salt > 1 ? salt : 0));
            for (int k = 0; k < e[i]; ++k) v *= base;
        }
        coeffs[static_cast<size_t>(e[var])] += v;
    }
    if (coeffs.back().is_zero()) return {};  // leading coefficient vanished
    return coeffs;
}

inline int univariate_gcd_degree(std::vector<Rational> a, std::vector<Rational> b) {
    auto trim = [](std::vector<Rational>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            Rational q = a.back() / b.back();
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
            trim(a);
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

/// True when specialization proves the primitive parts coprime in `var`.
inline bool certified_coprime_in(const MultiPoly& a, const MultiPoly& b, int var) {
    for (int salt = 0; salt < 3; ++salt) {
        auto ua = specialize_univariate(a, var, salt);
        if (ua.empty()) continue;
        auto ub = specialize_univariate(b, var, salt);
        if (ub.empty()) continue;
        if (univariate_gcd_degree(std::move(ua), std::move(ub)) == 0) return true;
        return false;  // plausibly a genuine common factor; run the full PRS
    }
    return false;
}

}  // namespace detail

/// GCD over the rationals, unique up to the integer-primitive normalization.
inline MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_chart(b);
    if (a.is_zero()) return detail::integer_primitive(b);
    if (b.is_zero()) return detail::integer_primitive(a);
    if (a.is_constant() || b.is_constant())
        return MultiPoly::constant(a.chart(), Rational(1));
    if (a == b) return detail::integer_primitive(a);

    // operands in disjoint variables are coprime over the rationals
    auto ua = detail::used_variables(a);
    auto ub = detail::used_variables(b);
    bool disjoint = true;
    for (size_t i = 0; i < ua.size(); ++i)
        if (ua[i] && ub[i]) disjoint = false;
    if (disjoint) return MultiPoly::constant(a.chart(), Rational(1));

    // main variable: highest-index chart variable occurring in either operand
    int var = -1;
    for (int i = static_cast<int>(a.chart().size()) - 1; i >= 0 && var < 0; --i)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) var = i;

    auto content_wrt = [var](const MultiPoly& p) {
        auto coeffs = detail::univariate_coefficients(p, var);
        MultiPoly c = MultiPoly::zero(p.chart());
        for (const auto& q : coeffs) {
            c = poly_gcd(c, q);
            if (c.is_constant() && !c.is_zero()) break;
        }
        return c;
    };

    MultiPoly cont_a = content_wrt(a);
    MultiPoly cont_b = content_wrt(b);

    // cheap certificate: if a specialization to one variable is coprime, the
    // whole gcd reduces to the gcd of the contents
    if (detail::certified_coprime_in(a, b, var))
        return detail::integer_primitive(poly_gcd(cont_a, cont_b));

    MultiPoly f = exact_divide(a, cont_a);
    MultiPoly g = exact_divide(b, cont_b);
    if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);

    // subresultant pseudo-remainder sequence on the primitive parts
    const MultiPoly one = MultiPoly::constant(a.chart(), Rational(1));
    MultiPoly gg = one;  // lc of the previous dividend
    MultiPoly hh = one;  // subresultant scale
    for (;;) {
        int delta = f.degree_in(var) - g.degree_in(var);
        MultiPoly r = detail::pseudo_remainder(f, g, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) <= 0)
            // primitive parts are coprime in the main variable
            return detail::integer_primitive(poly_gcd(cont_a, cont_b));
        MultiPoly next = exact_divide(r, gg * hh.pow(delta));
        f = g;
        g = next;
        gg = detail::leading_coefficient_in(f, var);
        if (delta >= 1)
            hh = (delta == 1) ? gg : exact_divide(gg.pow(delta), hh.pow(delta - 1));
    }
    MultiPoly pp = exact_divide(g, content_wrt(g));
    return detail::integer_primitive(pp * poly_gcd(cont_a, cont_b));
}

}  // namespace poisgeo
