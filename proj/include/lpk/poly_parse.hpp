#ifndef LPK_POLY_PARSE_HPP
#define LPK_POLY_PARSE_HPP

#include <cctype>
#include <stdexcept>
#include <string>

#include "lpk/poly.hpp"

namespace lpk {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Recursive-descent parser for the expression grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | var ('^' nat)? | '(' expr ')'
//   rational := int ('/' posint)?
// Whitespace insignificant; unary minus at expression head and after '('.
class PolyParser {
public:
    PolyParser(const std::string& text, VarSetPtr vars) : text_(text), vars_(std::move(vars)) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    Poly expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') { neg = true; ++pos_; }
        Poly acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+') { ++pos_; acc += term(); }
            else if (c == '-') { ++pos_; acc -= term(); }
            else break;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') { ++pos_; acc = acc * factor(); }
            else break;
        }
        return acc;
    }

    Poly factor() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return var_power();
        throw ParseError("expected factor", pos_);
    }

    Poly rational() {
        std::string num = digits();
        if (num.empty()) throw ParseError("expected number", pos_);
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            std::string den = digits();
            if (den.empty() || Int(den) == 0) throw ParseError("expected positive denominator", pos_);
            Rat r{Int(num), Int(den)};
            r.canonicalize();
            return Poly::constant(vars_, r);
        }
        return Poly::constant(vars_, Rat(Int(num)));
    }

    Poly var_power() {
        std::size_t start = pos_;
        std::string id;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') { id += c; ++pos_; }
            else break;
        }
        int idx = vars_->index_of(id);
        if (idx < 0) throw ParseError("unknown variable '" + id + "'", start);
        int exp = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::string d = digits();
            if (d.empty()) throw ParseError("expected exponent", pos_);
            exp = std::stoi(d);
        }
        Monomial m(vars_->size());
        m.e[idx] = exp;
        return Poly::term(vars_, m, Rat(1));
    }

    std::string digits() {
        std::string d;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) d += text_[pos_++];
        return d;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    const std::string& text_;
    VarSetPtr vars_;
    std::size_t pos_ = 0;
};

inline Poly poly_parse(const std::string& text, VarSetPtr vars) {
    return PolyParser(text, std::move(vars)).parse();
}

}  // namespace lpk

#endif
