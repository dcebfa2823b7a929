/*
 * Copyright 2026 The hitchkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * Text form of polynomials.
 *
 *   expr     := ['+'|'-'] term (('+'|'-') term)*
 *   term     := factor ('*' factor)*
 *   factor   := primary ('^' nat)*
 *   primary  := rational | var | '(' expr ')'
 *   rational := int ('/' posint)?
 *
 * Variable names are identifiers; bytes >= 0x80 are accepted so UTF-8 names
 * such as "η" work. The printer emits terms in descending lex order and its
 * output always parses back to the same polynomial.
 */

#ifndef HITCHKIT_POLY_TEXT_HPP
#define HITCHKIT_POLY_TEXT_HPP

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hitchkit/poly.hpp"

namespace hitch {

/// Syntax or semantic error in polynomial text, with a 1-based location.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool is_const = Poly::is_zero_exponent(e);
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (is_const || !mag.is_one()) {
            os << mag.to_string();
            need_star = true;
        }
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (need_star) os << '*';
            os << p.context().name(v);
            if (e[v] > 1) os << '^' << e[v];
            need_star = true;
        }
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, const Context& ctx, int line, int column)
        : text_(text), ctx_(ctx), line_(line), col_(column) {}

    Poly parse_all() {
        skip_ws();
        Poly p = expr();
        skip_ws();
        if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
        return p;
    }

private:
    Poly expr() {
        skip_ws();
        int sign = 1;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
            sign = peek() == '-' ? -1 : 1;
            advance();
        }
        Poly acc = term();
        if (sign < 0) acc = -acc;
        for (;;) {
            skip_ws();
            if (at_end() || (peek() != '+' && peek() != '-')) break;
            const char op = peek();
            advance();
            Poly rhs = term();
            if (op == '+') acc += rhs;
            else acc -= rhs;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            skip_ws();
            if (at_end() || peek() != '*') break;
            advance();
            acc *= factor();
        }
        return acc;
    }

    Poly factor() {
        Poly base = primary();
        for (;;) {
            skip_ws();
            if (at_end() || peek() != '^') break;
            advance();
            skip_ws();
            if (at_end() || !is_digit(peek())) fail("expected natural exponent after '^'");
            std::string digits = read_digits();
            if (digits.size() > 6) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    Poly primary() {
        skip_ws();
        if (at_end()) fail("unexpected end of input");
        const char ch = peek();
        if (ch == '(') {
            advance();
            Poly inner = expr();
            skip_ws();
            if (at_end() || peek() != ')') fail("expected ')'");
            advance();
            return inner;
        }
        if (is_digit(ch)) {
            const int l = line_, c = col_;
            std::string num = read_digits();
            std::string den = "1";
            if (!at_end() && peek() == '/') {
                advance();
                if (at_end() || !is_digit(peek())) fail("expected denominator after '/'");
                den = read_digits();
            }
            mpz_class zd(den, 10);
            if (zd == 0) throw ParseError("zero denominator", l, c);
            return Poly::constant(ctx_, Rational(mpz_class(num, 10), zd));
        }
        if (is_ident_start(ch)) {
            const int l = line_, c = col_;
            std::string name;
            while (!at_end() && is_ident_char(peek())) {
                name.push_back(peek());
                advance();
            }
            if (!ctx_.contains(name)) throw ParseError("unknown variable '" + name + "'", l, c);
            return Poly::variable(ctx_, name);
        }
        fail("unexpected '" + std::string(1, ch) + "'");
    }

    static bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }
    static bool is_ident_start(char ch) {
        auto u = static_cast<unsigned char>(ch);
        return std::isalpha(u) || ch == '_' || u >= 0x80;
    }
    static bool is_ident_char(char ch) { return is_ident_start(ch) || is_digit(ch) || ch == '\''; }

    std::string read_digits() {
        std::string s;
        while (!at_end() && is_digit(peek())) {
            s.push_back(peek());
            advance();
        }
        return s;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

    std::string_view text_;
    const Context& ctx_;
    std::size_t pos_ = 0;
    int line_;
    int col_;
};

}  // namespace detail

/// Parses `text` in the variable context `ctx`. `line`/`column` locate the
/// first character when the text is embedded in a larger document.
inline Poly parse_poly(std::string_view text, const Context& ctx, int line = 1, int column = 1) {
    return detail::PolyParser(text, ctx, line, column).parse_all();
}

/// Variable names in `text`, in order of first appearance. Uses the parser's
/// identifier rules but does not check syntax.
inline std::vector<std::string> identifiers_in(std::string_view text) {
    auto start = [](char ch) {
        auto u = static_cast<unsigned char>(ch);
        return std::isalpha(u) || ch == '_' || u >= 0x80;
    };
    std::vector<std::string> out;
    for (std::size_t i = 0; i < text.size();) {
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        } else if (start(text[i])) {
            std::size_t j = i;
            while (j < text.size() && (start(text[j]) || std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '\''))
                ++j;
            std::string name(text.substr(i, j - i));
            if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(std::move(name));
            i = j;
        } else {
            ++i;
        }
    }
    return out;
}

}  // namespace hitch

#endif  // HITCHKIT_POLY_TEXT_HPP
