#pragma once

#include <string>
#include <utility>
#include <vector>

#include "poisgeo/multipoly.hpp"

namespace poisgeo {

/// Quotient of two MultiPoly over one chart, kept in normal form:
/// gcd(numerator, denominator) = 1 and the denominator is monic in the
/// graded-lex leading coefficient. Equal values have equal representations.
class RationalFunction {
public:
    explicit RationalFunction(const Chart& chart)
        : num_(MultiPoly::zero(chart)),
          den_(MultiPoly::constant(chart, Rational(1))) {}

    RationalFunction(MultiPoly numerator, MultiPoly denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        num_.require_same_chart(den_);
        normalize();
    }

    explicit RationalFunction(MultiPoly p)
        : num_(std::move(p)), den_(MultiPoly::constant(num_.chart(), Rational(1))) {}

    static RationalFunction constant(const Chart& chart, const Rational& c) {
        return RationalFunction(MultiPoly::constant(chart, c));
    }
    static RationalFunction variable(const Chart& chart, const std::string& name) {
        return RationalFunction(MultiPoly::variable(chart, name));
    }
    static RationalFunction zero(const Chart& chart) { return RationalFunction(chart); }

    const MultiPoly& numerator() const { return num_; }
    const MultiPoly& denominator() const { return den_; }
    const Chart& chart() const { return num_.chart(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction operator-() const { return RationalFunction(unchecked{}, -num_, den_); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw error("division by the zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction pow(int n) const {
        if (n < 0) return RationalFunction(den_, num_).pow(-n);
        return RationalFunction(num_.pow(n), den_.pow(n));
    }

    /// Exact quotient-rule derivative.
    RationalFunction derivative(int index) const {
        MultiPoly dn = num_.derivative(index);
        if (den_.is_constant()) return RationalFunction(dn, den_);
        MultiPoly dd = den_.derivative(index);
        // e = gcd(den, den') divides the raw numerator; splitting it off keeps
        // the normalization gcd small for repeated denominators
        MultiPoly e = poly_gcd(den_, dd);
        MultiPoly raw = dn * den_ - num_ * dd;
        if (e.is_constant()) return RationalFunction(std::move(raw), den_ * den_);
        return RationalFunction(exact_divide(raw, e), den_ * exact_divide(den_, e));
    }
    RationalFunction derivative(const std::string& name) const {
        return derivative(chart_index(chart(), name));
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        Rational d = den_.evaluate(point);
        if (d.is_zero()) throw pole_error("pole: denominator vanishes at the point");
        return num_.evaluate(point) / d;
    }

    /// Approximate evaluation; poles surface as inf/nan.
    double evaluate_double(const std::vector<double>& point) const {
        return num_.evaluate_double(point) / den_.evaluate_double(point);
    }

    /// Substitutes one RationalFunction per chart coordinate (composition).
    /// All arguments must share one chart, which becomes the result's chart.
    RationalFunction substitute(const std::vector<RationalFunction>& args) const {
        if (args.size() != chart().size()) throw chart_error("substitute: arity mismatch");
        const Chart& target = args.front().chart();
        for (const auto& a : args)
            if (a.chart() != target) throw chart_error("substitute: mixed charts");
        RationalFunction n = substitute_poly(num_, args, target);
        RationalFunction d = substitute_poly(den_, args, target);
        if (d.is_zero()) throw pole_error("substitution lands in a pole");
        return n / d;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    std::string to_string() const {
        if (is_polynomial()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    struct unchecked {};
    RationalFunction(unchecked, MultiPoly n, MultiPoly d)
        : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_.is_zero()) throw error("denominator is identically zero");
        if (num_.is_zero()) {
            den_ = MultiPoly::constant(chart(), Rational(1));
            return;
        }
        if (!den_.is_constant()) {
            MultiPoly g = poly_gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = exact_divide(num_, g);
                den_ = exact_divide(den_, g);
            }
        }
        Rational lc = den_.leading_coefficient();
        if (lc != Rational(1)) {
            num_ *= Rational(1) / lc;
            den_ *= Rational(1) / lc;
        }
    }

    static RationalFunction substitute_poly(const MultiPoly& p,
                                            const std::vector<RationalFunction>& args,
                                            const Chart& target) {
        RationalFunction acc = RationalFunction::zero(target);
        for (const auto& [e, c] : p.terms()) {
            RationalFunction t = RationalFunction::constant(target, c);
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) t *= args[i].pow(e[i]);
            acc += t;
        }
        return acc;
    }

    MultiPoly num_;
    MultiPoly den_;
};

/// True iff f is the zero function (numerator empty after normalization).
inline bool is_identically_zero(const RationalFunction& f) { return f.is_zero(); }

}  // namespace poisgeo
