#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "poisgeo/ratfunc.hpp"

namespace poisgeo {

// expr   := ['-'] term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*
// factor := base ('^' uint)?
// base   := rational | ident | '(' expr ')'
// Whitespace insignificant; every identifier must name a chart coordinate.
namespace detail {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const Chart& chart)
        : text_(text), chart_(chart) {}

    RationalFunction run() {
        RationalFunction r = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw parse_error("trailing input at position " + std::to_string(pos_));
        return r;
    }

private:
    RationalFunction expr() {
        skip_ws();
        bool negate = consume('-');
        RationalFunction acc = term();
        if (negate) acc = -acc;
        for (;;) {
            skip_ws();
            if (consume('+'))
                acc += term();
            else if (consume('-'))
                acc -= term();
            else
                return acc;
        }
    }

    RationalFunction term() {
        RationalFunction acc = factor();
        for (;;) {
            skip_ws();
            if (consume('*')) {
                acc *= factor();
            } else if (consume('/')) {
                RationalFunction d = factor();
                if (d.is_zero()) throw parse_error("division by the zero polynomial");
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    RationalFunction factor() {
        RationalFunction b = base();
        skip_ws();
        if (consume('^')) {
            skip_ws();
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == start) throw parse_error("expected unsigned integer exponent");
            int n = std::stoi(std::string(text_.substr(start, pos_ - start)));
            return b.pow(n);
        }
        return b;
    }

    RationalFunction base() {
        skip_ws();
        if (pos_ >= text_.size()) throw parse_error("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction r = expr();
            skip_ws();
            if (!consume(')')) throw parse_error("missing ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return RationalFunction::constant(
                chart_, Rational(BigInt(std::string(text_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            try {
                return RationalFunction::variable(chart_, name);
            } catch (const chart_error&) {
                throw parse_error("unknown identifier: " + name);
            }
        }
        throw parse_error(std::string("unexpected character '") + c + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string_view text_;
    const Chart& chart_;
    size_t pos_ = 0;
};

}  // namespace detail

inline RationalFunction parse_expression(std::string_view text, const Chart& chart) {
    return detail::ExpressionParser(text, chart).run();
}

}  // namespace poisgeo
