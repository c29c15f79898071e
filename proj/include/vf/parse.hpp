#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "poly.hpp"

namespace vf {

// Recursive-descent parser for the polynomial grammar
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | var | '(' expr ')' | factor '^' nat
//
// with no implicit multiplication.  The optional leading '-' is accepted so
// canonical renderer output always round-trips.
class PolyParser {
public:
    PolyParser(std::string src, std::vector<std::string> vars)
        : src_(std::move(src)), vars_(std::move(vars)) {}

    PolyQ parse() {
        pos_ = 0;
        PolyQ p = expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("trailing input", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    PolyQ expr() {
        bool neg = eat('-');
        PolyQ p = term();
        if (neg) p = -p;
        for (;;) {
            if (eat('+')) p = p + term();
            else if (eat('-')) p = p - term();
            else return p;
        }
    }

    PolyQ term() {
        PolyQ p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    PolyQ factor() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
        PolyQ base;
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            base = PolyQ::constant(vars_.size(), rational_literal());
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            base = variable();
        } else if (c == '(') {
            ++pos_;
            base = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", pos_);
        }
        while (true) {
            skip_ws();
            if (pos_ < src_.size() && src_[pos_] == '^') {
                ++pos_;
                unsigned long e = natural();
                base = poly_pow(base, e);
            } else {
                break;
            }
        }
        return base;
    }

    Rational rational_literal() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::string num = src_.substr(start, pos_ - start);
        // a '/' directly attached to digits is part of the rational literal
        if (pos_ < src_.size() && src_[pos_] == '/') {
            std::size_t save = pos_;
            ++pos_;
            std::size_t dstart = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (pos_ == dstart) {
                pos_ = save; // not a fraction after all
                return Rational::from_string(num);
            }
            std::string den = src_.substr(dstart, pos_ - dstart);
            if (Rational::from_string(den).is_zero()) throw ParseError("zero denominator", dstart);
            return Rational::from_string(num + "/" + den);
        }
        return Rational::from_string(num);
    }

    unsigned long natural() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected exponent", pos_);
        return std::stoul(src_.substr(start, pos_ - start));
    }

    PolyQ variable() {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        std::string name = src_.substr(start, pos_ - start);
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return PolyQ::variable(vars_.size(), i);
        throw UnknownVariable(name, start);
    }

    static PolyQ poly_pow(const PolyQ& p, unsigned long e) {
        PolyQ r = PolyQ::constant(p.nvars(), Rational(1));
        PolyQ base = p;
        for (; e; e >>= 1) {
            if (e & 1) r = r * base;
            base = base * base;
        }
        return r;
    }

    std::string src_;
    std::vector<std::string> vars_;
    std::size_t pos_ = 0;
};

inline PolyQ parse_poly(const std::string& src, const std::vector<std::string>& vars) {
    return PolyParser(src, vars).parse();
}

// Variable names accepted at the session level; a handful of names are
// reserved for the internal t, dt, s, homogenization and family parameters.
inline bool valid_variable_name(const std::string& s) {
    static const char* reserved[] = {"s", "t", "dt", "beta", "u", "h"};
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    for (const char* r : reserved)
        if (s == r) return false;
    return true;
}

} // namespace vf
