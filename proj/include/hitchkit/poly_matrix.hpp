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

#ifndef HITCHKIT_POLY_MATRIX_HPP
#define HITCHKIT_POLY_MATRIX_HPP

#include <functional>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hitchkit/poly.hpp"
#include "hitchkit/poly_text.hpp"

namespace hitch {

/// Dense matrix of polynomials sharing one variable context.
class PolyMatrix {
public:
    PolyMatrix(Context ctx, std::size_t rows, std::size_t cols)
        : ctx_(std::move(ctx)), rows_(rows), cols_(cols), data_(rows * cols, Poly(ctx_)) {}

    static PolyMatrix identity(const Context& ctx, std::size_t n) {
        PolyMatrix m(ctx, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(ctx, Rational(1));
        return m;
    }
    static PolyMatrix from_rationals(const Context& ctx, std::initializer_list<std::initializer_list<long>> rows) {
        PolyMatrix m(ctx, rows.size(), rows.size() ? rows.begin()->size() : 0);
        std::size_t i = 0;
        for (const auto& r : rows) {
            if (r.size() != m.cols_) throw std::invalid_argument("ragged matrix literal");
            std::size_t j = 0;
            for (long x : r) m(i, j++) = Poly::constant(ctx, Rational(x));
            ++i;
        }
        return m;
    }
    /// Rows of polynomial text, e.g. {{"a", "b"}, {"c", "-a"}}.
    static PolyMatrix parse(const Context& ctx, const std::vector<std::vector<std::string>>& rows) {
        PolyMatrix m(ctx, rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix literal");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = parse_poly(rows[i][j], ctx);
        }
        return m;
    }

    const Context& context() const noexcept { return ctx_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Poly& operator()(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
    const Poly& operator()(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }

    bool is_zero() const {
        for (const auto& p : data_)
            if (!p.is_zero()) return false;
        return true;
    }

    PolyMatrix transpose() const {
        PolyMatrix t(ctx_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    Poly trace() const {
        require_square();
        Poly t(ctx_);
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }
    PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block outside matrix");
        PolyMatrix b(ctx_, nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }
    PolyMatrix map(const std::function<Poly(const Poly&)>& f, const Context& target) const {
        PolyMatrix out(target, rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = f(data_[k]);
        return out;
    }
    PolyMatrix embed(const Context& target) const {
        return map([&](const Poly& p) { return p.embed(target); }, target);
    }

    PolyMatrix operator-() const {
        PolyMatrix out = *this;
        for (auto& p : out.data_) p = -p;
        return out;
    }
    PolyMatrix& operator+=(const PolyMatrix& o) {
        require_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    PolyMatrix& operator-=(const PolyMatrix& o) {
        require_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator*(const Poly& s, PolyMatrix m) {
        for (auto& p : m.data_) p = s * p;
        return m;
    }
    friend PolyMatrix operator*(const Rational& s, PolyMatrix m) {
        for (auto& p : m.data_) p *= s;
        return m;
    }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        if (!(a.ctx_ == b.ctx_)) throw ContextMismatch("matrices live in different variable contexts");
        PolyMatrix out(a.ctx_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Poly& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
            }
        return out;
    }
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Kronecker product; index (i*rows(b)+k, j*cols(b)+l) holds a(i,j)*b(k,l).
    friend PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
        if (!(a.ctx_ == b.ctx_)) throw ContextMismatch("matrices live in different variable contexts");
        PolyMatrix out(a.ctx_, a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l)
                        out(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
        return out;
    }

    /// Inverse of a matrix with rational constant entries; nullopt if singular.
    std::optional<PolyMatrix> constant_inverse() const {
        require_square();
        const std::size_t n = rows_;
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                auto c = (*this)(i, j).as_constant();
                if (!c) throw std::invalid_argument("constant_inverse: entry is not a rational constant");
                m[i][j] = *c;
            }
            m[i][n + i] = Rational(1);
        }
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && m[piv][col].is_zero()) ++piv;
            if (piv == n) return std::nullopt;
            std::swap(m[piv], m[col]);
            const Rational inv = Rational(1) / m[col][col];
            for (auto& x : m[col]) x *= inv;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col || m[i][col].is_zero()) continue;
                const Rational f = m[i][col];
                for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[col][j];
            }
        }
        PolyMatrix out(ctx_, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out(i, j) = Poly::constant(ctx_, m[i][n + j]);
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << hitch::to_string((*this)(i, j));
            os << "]";
        }
        os << "]";
        return os.str();
    }

    void require_square() const {
        if (!is_square()) throw std::invalid_argument("matrix is not square");
    }

private:
    void require_shape(const PolyMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
        if (!(ctx_ == o.ctx_)) throw ContextMismatch("matrices live in different variable contexts");
    }

    Context ctx_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Poly> data_;
};

inline std::ostream& operator<<(std::ostream& os, const PolyMatrix& m) { return os << m.to_string(); }

/// Determinant by cofactor expansion along the first row.
inline Poly det_cofactor(const PolyMatrix& m) {
    m.require_square();
    const std::size_t n = m.rows();
    if (n == 0) return Poly::constant(m.context(), Rational(1));
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    Poly out(m.context());
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        PolyMatrix minor(m.context(), n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0, c = 0; k < n; ++k)
                if (k != j) minor(i - 1, c++) = m(i, k);
        Poly term = m(0, j) * det_cofactor(minor);
        if (j % 2) out -= term;
        else out += term;
    }
    return out;
}

/// Coefficients of det(η·Id − M): coeffs[k] multiplies η^k.
class CharPoly {
public:
    explicit CharPoly(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {}

    std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const Poly& coefficient(std::size_t k) const { return coeffs_.at(k); }
    const std::vector<Poly>& coefficients() const noexcept { return coeffs_; }

    /// The polynomial in a context whose first variable is `eta`.
    Poly as_poly(const std::string& eta = "η") const {
        const Context& base = coeffs_.front().context();
        Context ctx = base.contains(eta) ? base : Context{eta}.merged(base);
        const Poly e = Poly::variable(ctx, eta);
        Poly out(ctx), power = Poly::constant(ctx, Rational(1));
        for (const auto& c : coeffs_) {
            out += c.embed(ctx) * power;
            power *= e;
        }
        return out;
    }
    std::string to_string() const { return hitch::to_string(as_poly()); }

    friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Poly> coeffs_;
};

/// Faddeev–LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
inline CharPoly char_poly_faddeev(const PolyMatrix& a) {
    a.require_square();
    const std::size_t n = a.rows();
    std::vector<Poly> c(n + 1, Poly(a.context()));
    c[n] = Poly::constant(a.context(), Rational(1));
    PolyMatrix mk(a.context(), n, n);
    const PolyMatrix id = PolyMatrix::identity(a.context(), n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = a * mk + c[n - k + 1] * id;
        c[n - k] = (a * mk).trace() * Rational(-1, static_cast<long>(k));
    }
    return CharPoly(std::move(c));
}

/// det(η·Id − M) by cofactor expansion, read off by η-degree.
inline CharPoly char_poly_cofactor(const PolyMatrix& a) {
    a.require_square();
    const std::string eta = "__eta";
    Context ctx = Context{eta}.merged(a.context());
    PolyMatrix m = -a.embed(ctx);
    const Poly e = Poly::variable(ctx, eta);
    for (std::size_t i = 0; i < a.rows(); ++i) m(i, i) += e;
    Poly d = det_cofactor(m);
    std::vector<Poly> coeffs;
    for (unsigned k = 0; k <= a.rows(); ++k) coeffs.push_back(d.coefficient(0, k).embed(a.context()));
    return CharPoly(std::move(coeffs));
}

/// Characteristic polynomial; sizes up to 4 are cross-checked by cofactors.
inline CharPoly char_poly(const PolyMatrix& a) {
    CharPoly fl = char_poly_faddeev(a);
    if (a.rows() <= 4 && !(fl == char_poly_cofactor(a)))
        throw std::logic_error("char_poly: Faddeev-LeVerrier and cofactor expansion disagree");
    return fl;
}

enum class FormKind { symmetric, antisymmetric };

/// Nondegenerate bilinear form given by a symmetric or antisymmetric matrix.
class QuadForm {
public:
    QuadForm(PolyMatrix m, FormKind kind) : m_(std::move(m)), kind_(kind) {
        m_.require_square();
        PolyMatrix t = m_.transpose();
        if (kind == FormKind::symmetric ? !(t == m_) : !(t == -m_))
            throw std::invalid_argument(kind == FormKind::symmetric ? "form is not symmetric"
                                                                    : "form is not antisymmetric");
        auto d = det_cofactor(m_).as_constant();
        if (d && d->is_zero()) throw std::invalid_argument("form is degenerate");
    }
    const PolyMatrix& matrix() const noexcept { return m_; }
    FormKind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return m_.rows(); }

private:
    PolyMatrix m_;
    FormKind kind_;
};

/// True iff Q Φ + Φ^t Q = 0.
inline bool is_q_skew(const PolyMatrix& phi, const QuadForm& q) {
    if (!phi.is_square() || phi.rows() != q.size()) return false;
    const PolyMatrix Q = q.matrix().embed(phi.context());
    return (Q * phi + phi.transpose() * Q).is_zero();
}

/// Pfaffian of an antisymmetric matrix by expansion along the first row.
inline Poly pfaffian_raw(const PolyMatrix& a) {
    a.require_square();
    const std::size_t n = a.rows();
    if (n % 2) return Poly(a.context());
    if (n == 0) return Poly::constant(a.context(), Rational(1));
    Poly out(a.context());
    for (std::size_t j = 1; j < n; ++j) {
        if (a(0, j).is_zero()) continue;
        std::vector<std::size_t> keep;
        for (std::size_t k = 1; k < n; ++k)
            if (k != j) keep.push_back(k);
        PolyMatrix minor(a.context(), n - 2, n - 2);
        for (std::size_t r = 0; r < keep.size(); ++r)
            for (std::size_t c = 0; c < keep.size(); ++c) minor(r, c) = a(keep[r], keep[c]);
        Poly term = a(0, j) * pfaffian_raw(minor);
        if (j % 2) out += term;
        else out -= term;
    }
    return out;
}

/// Pf(QΦ)/sqrt(det Q) for Φ skew with respect to a symmetric form Q, so that
/// the result squares to det Φ.
inline Poly pfaffian(const PolyMatrix& phi, const QuadForm& q) {
    if (q.kind() != FormKind::symmetric) throw std::invalid_argument("pfaffian: form must be symmetric");
    if (phi.rows() % 2) throw std::invalid_argument("pfaffian: size must be even");
    if (!is_q_skew(phi, q)) throw std::invalid_argument("pfaffian: matrix is not skew for the form");
    auto d = det_cofactor(q.matrix()).as_constant();
    if (!d) throw std::invalid_argument("pfaffian: form determinant is not constant");
    auto root = d->sqrt();
    if (!root) throw std::invalid_argument("pfaffian: det(Q) = " + d->to_string() + " is not a rational square");
    Poly pf = pfaffian_raw(q.matrix().embed(phi.context()) * phi) * (Rational(1) / *root);
    if (!(pf * pf == det_cofactor(phi))) throw std::logic_error("pfaffian: Pf^2 != det");
    return pf;
}

}  // namespace hitch

#endif  // HITCHKIT_POLY_MATRIX_HPP
