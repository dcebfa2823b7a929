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

// Fraction-free Gauss-Jordan elimination over a polynomial ring R = Q[x...].
// Ranks and kernels are those over the fraction field of R; when R has at most
// one variable, vectors are made primitive with univariate gcds.

#ifndef HITCHKIT_LINEAR_HPP
#define HITCHKIT_LINEAR_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "hitchkit/poly.hpp"

namespace hitch::linear {

using Row = std::vector<Poly>;
using Matrix = std::vector<Row>;

inline bool univariate_ring(const Context& ctx) { return ctx.size() <= 1; }

/// Divides a vector by the gcd of its entries (univariate rings) and scales
/// it so that its last nonzero entry has leading coefficient one.
inline void make_primitive(Row& v) {
    if (v.empty()) return;
    const Context& ctx = v.front().context();
    std::size_t last = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) last = i;
    if (last == v.size()) return;
    if (univariate_ring(ctx) && ctx.size() == 1) {
        Poly g(ctx);
        for (const auto& x : v)
            if (!x.is_zero()) g = g.is_zero() ? make_monic(x) : gcd_univariate(g, x);
        if (!g.is_constant())
            for (auto& x : v)
                if (!x.is_zero()) x = *exact_divide(x, g);
    }
    const Rational lead = v[last].leading_coefficient();
    for (auto& x : v) x *= Rational(1) / lead;
}

struct Echelon {
    Matrix rows;                                     // reduced rows, pivots first
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
};

inline std::size_t weight(const Poly& p) { return p.total_degree() * 64 + p.term_count(); }

/// Fraction-free Gauss-Jordan: every pivot column is zero outside its pivot row.
inline Echelon eliminate(Matrix m) {
    Echelon out;
    if (m.empty()) return out;
    const std::size_t ncols = m.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < m.size(); ++col) {
        std::size_t best = m.size();
        for (std::size_t i = r; i < m.size(); ++i)
            if (!m[i][col].is_zero() && (best == m.size() || weight(m[i][col]) < weight(m[best][col]))) best = i;
        if (best == m.size()) continue;
        std::swap(m[r], m[best]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][col].is_zero()) continue;
            const Poly a = m[r][col];
            const Poly b = m[i][col];
            for (std::size_t j = 0; j < ncols; ++j) m[i][j] = a * m[i][j] - b * m[r][j];
            make_primitive(m[i]);
        }
        out.pivots.emplace_back(r, col);
        ++r;
    }
    out.rows = std::move(m);
    return out;
}

inline std::size_t rank(const Matrix& m) { return eliminate(m).pivots.size(); }

/// Basis of the right kernel {x : m x = 0} over the fraction field, with
/// polynomial entries. `ncols` is needed when `m` has no rows.
inline std::vector<Row> kernel_basis(const Matrix& m, std::size_t ncols, const Context& ring) {
    Echelon e = eliminate(m);
    std::vector<bool> is_pivot(ncols, false);
    for (auto [r, c] : e.pivots) is_pivot[c] = true;
    std::vector<Row> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        Poly common = Poly::constant(ring, Rational(1));
        for (auto [r, c] : e.pivots) common *= e.rows[r][c];
        Row v(ncols, Poly(ring));
        v[f] = common;
        for (auto [r, c] : e.pivots) {
            if (e.rows[r][f].is_zero()) continue;
            Poly others = Poly::constant(ring, Rational(1));
            for (auto [r2, c2] : e.pivots)
                if (r2 != r) others *= e.rows[r2][c2];
            v[c] = -(e.rows[r][f] * others);
        }
        make_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hitch::linear

#endif  // HITCHKIT_LINEAR_HPP
