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
 * The isogeny SL(2) x SL(2) -> SO(4) on Higgs fields.
 *
 * Conventions: the frame F1 is {e⊗e, e⊗f, f⊗e, f⊗f}; characteristic
 * polynomials are det(η·Id - M); for a traceless 2x2 field φ = [[a,b],[c,-a]]
 * the quadratic differential is q = a^2 + bc = -det φ, so that φ^2 = q·Id.
 */

#ifndef HITCHKIT_ISOGENY_HPP
#define HITCHKIT_ISOGENY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "hitchkit/poly.hpp"
#include "hitchkit/poly_matrix.hpp"

namespace hitch {

inline void require_traceless(const PolyMatrix& m, const char* what) {
    if (!m.is_square()) throw std::invalid_argument(std::string(what) + " is not square");
    if (!m.trace().is_zero()) throw std::invalid_argument(std::string(what) + " is not traceless");
}

/// q = -det φ for a traceless 2x2 field.
inline Poly quadratic_differential(const PolyMatrix& phi) {
    require_traceless(phi, "φ");
    if (phi.rows() != 2) throw std::invalid_argument("φ must be 2x2");
    return -det_cofactor(phi);
}

inline PolyMatrix omega(const Context& ctx) { return PolyMatrix::from_rationals(ctx, {{0, 1}, {-1, 0}}); }

/// φ1 ⊗ Id + Id ⊗ φ2 in the frame F1.
inline PolyMatrix tensor_higgs(const PolyMatrix& phi1, const PolyMatrix& phi2) {
    require_traceless(phi1, "φ1");
    require_traceless(phi2, "φ2");
    if (phi1.rows() != 2 || phi2.rows() != 2) throw std::invalid_argument("tensor_higgs expects 2x2 fields");
    if (!(phi1.context() == phi2.context())) throw ContextMismatch("φ1 and φ2 live in different contexts");
    const PolyMatrix id = PolyMatrix::identity(phi1.context(), 2);
    return kron(phi1, id) + kron(id, phi2);
}

struct FrameForms {
    PolyMatrix q1;  // ω⊗ω in F1
    PolyMatrix q2;  // the same form in F2 = {e⊗f - f⊗e, e⊗e, e⊗f + f⊗e, f⊗f}
    PolyMatrix p;   // columns: F2 in F1 coordinates
};

inline FrameForms frame_quadforms(const Context& ctx = {}) {
    PolyMatrix q1 = kron(omega(ctx), omega(ctx));
    PolyMatrix p = PolyMatrix::from_rationals(ctx, {{0, 1, 0, 0}, {1, 0, 1, 0}, {-1, 0, 1, 0}, {0, 0, 0, 1}});
    PolyMatrix q2 = PolyMatrix::from_rationals(ctx, {{2, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -2, 0}, {0, 1, 0, 0}});
    if (!(p.transpose() * q1 * p == q2)) throw std::logic_error("frame_quadforms: P^t Q1 P != Q2");
    return {q1, q2, p};
}

/// q_right^{-1} β^t q_left.
inline PolyMatrix q_transpose(const PolyMatrix& beta, const QuadForm& q_left, const QuadForm& q_right) {
    auto inv = q_right.matrix().embed(beta.context()).constant_inverse();
    if (!inv) throw std::invalid_argument("q_transpose: right form is not invertible");
    return *inv * beta.transpose() * q_left.matrix().embed(beta.context());
}

struct So13Reduction {
    PolyMatrix p;        // frame change F1 -> F2
    PolyMatrix reduced;  // P^{-1} Φ P
    PolyMatrix beta;     // 1x3 top-right block
    PolyMatrix beta_t;   // q-transpose of β, so the bottom-left block is -beta_t
    bool matches_expected = false;  // β == [-c, 2a, b]
};

/// Conjugates tensor_higgs(φ, -φ) into the block form [[0, β], [-β^T, 0]].
inline So13Reduction so13_reduce(const PolyMatrix& phi) {
    require_traceless(phi, "φ");
    const Context& ctx = phi.context();
    const PolyMatrix big = tensor_higgs(phi, -phi);
    FrameForms f = frame_quadforms(ctx);
    PolyMatrix reduced = *f.p.constant_inverse() * big * f.p;
    if (!reduced.block(0, 0, 1, 1).is_zero() || !reduced.block(1, 1, 3, 3).is_zero())
        throw std::logic_error("so13_reduce: diagonal blocks do not vanish");
    PolyMatrix beta = reduced.block(0, 1, 1, 3);
    QuadForm q1(f.q2.block(0, 0, 1, 1), FormKind::symmetric);
    QuadForm q3(f.q2.block(1, 1, 3, 3), FormKind::symmetric);
    PolyMatrix beta_t = q_transpose(beta, q1, q3);
    if (!(reduced.block(1, 0, 3, 1) == -beta_t))
        throw std::logic_error("so13_reduce: bottom-left block is not -β^T");
    const Poly& a = phi(0, 0);
    const Poly& b = phi(0, 1);
    const Poly& c = phi(1, 0);
    PolyMatrix expected(ctx, 1, 3);
    expected(0, 0) = -c;
    expected(0, 1) = a * Rational(2);
    expected(0, 2) = b;
    return {f.p, reduced, beta, beta_t, beta == expected};
}

struct ReducedCh {
    std::optional<Poly> c;  // Φ^3 = c Φ
    Poly tr2;               // Tr(Φ^2)
    bool identity_holds = false;
};

/// Finds a scalar c with Φ^3 = c Φ, if one exists.
inline ReducedCh verify_reduced_ch(const PolyMatrix& phi) {
    phi.require_square();
    const PolyMatrix phi2 = phi * phi;
    const PolyMatrix phi3 = phi2 * phi;
    ReducedCh out{std::nullopt, phi2.trace(), false};
    if (phi.is_zero()) {
        out.c = Poly(phi.context());
        out.identity_holds = true;
        return out;
    }
    for (std::size_t i = 0; i < phi.rows() && !out.c; ++i)
        for (std::size_t j = 0; j < phi.cols() && !out.c; ++j)
            if (!phi(i, j).is_zero()) {
                auto c = exact_divide(phi3(i, j), phi(i, j));
                if (!c) return out;
                out.c = *c;
            }
    out.identity_holds = (phi3 - *out.c * phi).is_zero();
    if (!out.identity_holds) out.c.reset();
    return out;
}

enum class HitchinGroup { sl2xsl2, so4 };

struct HitchinPoint {
    HitchinGroup group;
    Poly first;   // q1, or the η^2 coefficient a2
    Poly second;  // q2, or the Pfaffian
};

inline HitchinPoint hitchin_point_sl2xsl2(const PolyMatrix& phi1, const PolyMatrix& phi2) {
    return {HitchinGroup::sl2xsl2, quadratic_differential(phi1), quadratic_differential(phi2)};
}

/// (a2, Pf) for a traceless Q-skew 4x4 field, with a2 checked against -Tr(Φ^2)/2.
inline HitchinPoint hitchin_point_so4(const PolyMatrix& phi, const QuadForm& q) {
    require_traceless(phi, "Φ");
    if (phi.rows() != 4) throw std::invalid_argument("SO(4) Higgs field must be 4x4");
    if (!is_q_skew(phi, q)) throw std::invalid_argument("Φ is not skew for the form");
    CharPoly ch = char_poly(phi);
    Poly a2 = ch.coefficient(2);
    if (!(a2 == (phi * phi).trace() * Rational(-1, 2))) throw std::logic_error("a2 != -Tr(Φ^2)/2");
    Poly pf = pfaffian(phi, q);
    if (!(pf * pf == ch.coefficient(0))) throw std::logic_error("Pf^2 != constant coefficient");
    return {HitchinGroup::so4, a2, pf};
}

/// (q1, q2) -> (-2(q1 + q2), q1 - q2). The Pfaffian of tensor_higgs in the
/// ω⊗ω normalization is q2 - q1, so the second slot agrees up to sign.
inline std::pair<Poly, Poly> base_isogeny_map(const Poly& q1, const Poly& q2) {
    return {(q1 + q2) * Rational(-2), q1 - q2};
}

}  // namespace hitch

#endif  // HITCHKIT_ISOGENY_HPP
