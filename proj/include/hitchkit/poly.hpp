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
 * Sparse multivariate polynomials over the rationals.
 *
 * A Poly lives in a Context: an ordered list of variable names. Monomials are
 * ordered lexicographically by exponent vector, so the first declared variable
 * is the most significant one. Zero coefficients are never stored.
 */

#ifndef HITCHKIT_POLY_HPP
#define HITCHKIT_POLY_HPP

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hitchkit/rational.hpp"

namespace hitch {

/// Thrown when two operands do not share a variable context.
class ContextMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Ordered set of variable names shared by a family of polynomials.
class Context {
public:
    Context() : names_(std::make_shared<const std::vector<std::string>>()) {}
    Context(std::initializer_list<std::string> names) : Context(std::vector<std::string>(names)) {}
    explicit Context(std::vector<std::string> names) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i].empty()) throw std::invalid_argument("empty variable name");
            for (std::size_t j = 0; j < i; ++j)
                if (names[i] == names[j]) throw std::invalid_argument("duplicate variable '" + names[i] + "'");
        }
        names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
    }

    std::size_t size() const noexcept { return names_->size(); }
    const std::string& name(std::size_t i) const { return names_->at(i); }
    const std::vector<std::string>& names() const noexcept { return *names_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_->size(); ++i)
            if ((*names_)[i] == name) return i;
        return std::nullopt;
    }
    std::size_t require(std::string_view name) const {
        auto i = index_of(name);
        if (!i) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
        return *i;
    }
    bool contains(std::string_view name) const { return index_of(name).has_value(); }

    /// This context followed by every name of `other` not already present.
    Context merged(const Context& other) const {
        std::vector<std::string> all = names();
        for (const auto& n : other.names())
            if (!contains(n)) all.push_back(n);
        return Context(std::move(all));
    }

    friend bool operator==(const Context& a, const Context& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponents = std::vector<unsigned>;

class Poly {
public:
    using TermMap = std::map<Exponents, Rational, std::greater<Exponents>>;

    explicit Poly(Context ctx = {}) : ctx_(std::move(ctx)) {}

    static Poly constant(Context ctx, const Rational& c) {
        Poly p(std::move(ctx));
        p.add_term(Exponents(p.ctx_.size(), 0), c);
        return p;
    }
    static Poly variable(Context ctx, std::string_view name) {
        Poly p(std::move(ctx));
        Exponents e(p.ctx_.size(), 0);
        e[p.ctx_.require(name)] = 1;
        p.add_term(std::move(e), Rational(1));
        return p;
    }
    static Poly monomial(Context ctx, Exponents e, const Rational& c) {
        if (e.size() != ctx.size()) throw std::invalid_argument("exponent vector length does not match context");
        Poly p(std::move(ctx));
        p.add_term(std::move(e), c);
        return p;
    }

    const Context& context() const noexcept { return ctx_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && is_zero_exponent(terms_.begin()->first));
    }
    std::optional<Rational> as_constant() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) return std::nullopt;
        return terms_.begin()->second;
    }
    Rational constant_term() const {
        auto it = terms_.find(Exponents(ctx_.size(), 0));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Leading term in lex order; undefined for the zero polynomial.
    const Exponents& leading_exponents() const { return terms_.begin()->first; }
    const Rational& leading_coefficient() const { return terms_.begin()->second; }

    unsigned degree_in(std::size_t var) const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }
    unsigned degree_in(std::string_view name) const { return degree_in(ctx_.require(name)); }
    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, total(e));
        return d;
    }
    /// Lowest total degree of a term; 0 for the zero polynomial.
    unsigned order() const {
        if (terms_.empty()) return 0;
        unsigned d = ~0u;
        for (const auto& [e, c] : terms_) d = std::min(d, total(e));
        return d;
    }
    bool uses(std::size_t var) const {
        for (const auto& [e, c] : terms_)
            if (e[var] != 0) return true;
        return false;
    }
    std::vector<std::size_t> used_variables() const {
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < ctx_.size(); ++v)
            if (uses(v)) out.push_back(v);
        return out;
    }

    /// Coefficient of var^power, with that variable's exponent cleared.
    Poly coefficient(std::size_t var, unsigned power) const {
        Poly out(ctx_);
        for (const auto& [e, c] : terms_) {
            if (e[var] != power) continue;
            Exponents f = e;
            f[var] = 0;
            out.add_term(std::move(f), c);
        }
        return out;
    }

    void add_term(Exponents e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly out(ctx_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }
    Poly& operator+=(const Poly& o) {
        require_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        require_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Poly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.require_same(b);
        Poly out(a.ctx_);
        Exponents e(a.ctx_.size());
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) {
        a.require_same(b);
        return a.terms_ == b.terms_;
    }

    Poly pow(unsigned n) const {
        Poly result = constant(ctx_, Rational(1));
        Poly base = *this;
        while (n) {
            if (n & 1u) result *= base;
            n >>= 1u;
            if (n) base *= base;
        }
        return result;
    }

    /// Formal partial derivative.
    Poly derivative(std::size_t var) const {
        Poly out(ctx_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents f = e;
            --f[var];
            out.add_term(std::move(f), c * Rational(static_cast<long>(e[var])));
        }
        return out;
    }
    Poly derivative(std::string_view name) const { return derivative(ctx_.require(name)); }

    /// Ring homomorphism into `target`: variable i goes to images[i].
    Poly evaluate_into(const Context& target, const std::vector<Poly>& images) const {
        if (images.size() != ctx_.size()) throw std::invalid_argument("image count does not match context");
        for (const auto& im : images)
            if (!(im.context() == target)) throw ContextMismatch("substitution image lives in another context");
        std::vector<std::vector<Poly>> powers(ctx_.size());
        auto power = [&](std::size_t v, unsigned k) -> const Poly& {
            auto& cache = powers[v];
            if (cache.empty()) cache.push_back(constant(target, Rational(1)));
            while (cache.size() <= k) cache.push_back(cache.back() * images[v]);
            return cache[k];
        };
        Poly out(target);
        for (const auto& [e, c] : terms_) {
            Poly term = constant(target, c);
            for (std::size_t v = 0; v < e.size(); ++v)
                if (e[v]) term *= power(v, e[v]);
            out += term;
        }
        return out;
    }

    Poly substitute(std::size_t var, const Poly& value) const {
        if (!(value.context() == ctx_)) throw ContextMismatch("substituted value lives in another context");
        std::vector<Poly> images;
        images.reserve(ctx_.size());
        for (std::size_t v = 0; v < ctx_.size(); ++v)
            images.push_back(v == var ? value : variable(ctx_, ctx_.name(v)));
        return evaluate_into(ctx_, images);
    }
    Poly substitute(std::string_view name, const Poly& value) const { return substitute(ctx_.require(name), value); }

    /// Re-expresses this polynomial in `target`, matching variables by name.
    Poly embed(const Context& target) const {
        std::vector<std::optional<std::size_t>> map(ctx_.size());
        for (std::size_t v = 0; v < ctx_.size(); ++v) map[v] = target.index_of(ctx_.name(v));
        Poly out(target);
        for (const auto& [e, c] : terms_) {
            Exponents f(target.size(), 0);
            for (std::size_t v = 0; v < e.size(); ++v) {
                if (e[v] == 0) continue;
                if (!map[v]) throw ContextMismatch("variable '" + ctx_.name(v) + "' missing from target context");
                f[*map[v]] = e[v];
            }
            out.add_term(std::move(f), c);
        }
        return out;
    }

    void require_same(const Poly& o) const {
        if (!(ctx_ == o.ctx_)) throw ContextMismatch("polynomials live in different variable contexts");
    }

    static unsigned total(const Exponents& e) {
        unsigned s = 0;
        for (unsigned x : e) s += x;
        return s;
    }
    static bool is_zero_exponent(const Exponents& e) {
        return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
    }

private:
    Context ctx_;
    TermMap terms_;
};

inline Poly constant_like(const Poly& p, const Rational& c) { return Poly::constant(p.context(), c); }

/// Division by a polynomial whose leading coefficient in `var` is a rational
/// constant; the other variables are treated as coefficients.
inline std::pair<Poly, Poly> divide_in(const Poly& a, const Poly& b, std::size_t var) {
    a.require_same(b);
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    const unsigned db = b.degree_in(var);
    auto lead = b.coefficient(var, db).as_constant();
    if (!lead) throw std::invalid_argument("divisor leading coefficient is not a constant");
    Poly q(a.context()), r = a;
    const Rational inv = Rational(1) / *lead;
    while (!r.is_zero()) {
        unsigned dr = r.degree_in(var);
        if (dr < db) break;
        Poly c = r.coefficient(var, dr) * inv;
        Exponents shift(a.context().size(), 0);
        shift[var] = dr - db;
        Poly step = c * Poly::monomial(a.context(), shift, Rational(1));
        q += step;
        r -= step * b;
    }
    return {q, r};
}

/// Exact multivariate division; nullopt when b does not divide a.
inline std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
    a.require_same(b);
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly q(a.context()), r = a;
    const Exponents& lb = b.leading_exponents();
    const Rational& cb = b.leading_coefficient();
    while (!r.is_zero()) {
        const Exponents& lr = r.leading_exponents();
        Exponents shift(lr.size());
        for (std::size_t i = 0; i < lr.size(); ++i) {
            if (lr[i] < lb[i]) return std::nullopt;
            shift[i] = lr[i] - lb[i];
        }
        Poly step = Poly::monomial(a.context(), shift, r.leading_coefficient() / cb);
        q += step;
        r -= step * b;
    }
    return q;
}

/// Single variable shared by two polynomials, if they are jointly univariate.
inline std::optional<std::size_t> common_univariate_variable(const Poly& a, const Poly& b) {
    a.require_same(b);
    std::vector<std::size_t> used = a.used_variables();
    for (std::size_t v : b.used_variables())
        if (std::find(used.begin(), used.end(), v) == used.end()) used.push_back(v);
    if (used.size() > 1) return std::nullopt;
    return used.empty() ? std::size_t{0} : used.front();
}

inline Poly make_monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading_coefficient());
}

/// Monic gcd of two univariate polynomials (Euclid). gcd(0, 0) = 0.
inline Poly gcd_univariate(const Poly& a, const Poly& b) {
    auto var = common_univariate_variable(a, b);
    if (!var) throw std::invalid_argument("gcd_univariate: inputs are not univariate in a common variable");
    if (a.context().size() == 0) return a.is_zero() && b.is_zero() ? a : Poly::constant(a.context(), Rational(1));
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divide_in(x, y, *var).second;
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(x);
}

}  // namespace hitch

#endif  // HITCHKIT_POLY_HPP
