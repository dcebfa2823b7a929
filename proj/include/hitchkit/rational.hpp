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

#ifndef HITCHKIT_RATIONAL_HPP
#define HITCHKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hitch {

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        value_ = mpq_class(mpz_class(num), mpz_class(den));
        value_.canonicalize();
    }
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    /// Parses "p" or "p/q" (optional leading sign on p only).
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        auto digits_ok = [](std::string_view s, bool allow_sign) {
            if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
            if (s.empty()) return false;
            for (char ch : s)
                if (ch < '0' || ch > '9') return false;
            return true;
        };
        std::string_view num = text.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
        if (!digits_ok(num, true) || !digits_ok(den, false))
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        std::string n(num);
        if (!n.empty() && n.front() == '+') n.erase(0, 1);
        mpz_class zn(n, 10), zd(std::string(den), 10);
        if (zd == 0) throw std::domain_error("rational with zero denominator");
        return Rational(zn, zd);
    }

    const mpq_class& raw() const noexcept { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_one() const noexcept { return value_ == 1; }
    bool is_integer() const noexcept { return value_.get_den() == 1; }
    int sign() const noexcept { return sgn(value_); }

    /// Exact square root when both numerator and denominator are perfect squares.
    std::optional<Rational> sqrt() const {
        if (sign() < 0) return std::nullopt;
        const mpz_class& n = value_.get_num();
        const mpz_class& d = value_.get_den();
        if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        return Rational(rn, rd);
    }

    std::string to_string() const { return value_.get_str(10); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero rational");
        value_ /= o.value_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_{0};
};

inline Rational pow(const Rational& base, unsigned exp) {
    Rational r(1);
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace hitch

#endif  // HITCHKIT_RATIONAL_HPP
