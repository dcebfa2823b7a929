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

#include <gtest/gtest.h>

#include <random>

#include "hitchkit/isogeny.hpp"
#include "hitchkit/poly_text.hpp"

namespace {

using namespace hitch;

const Context& abc() {
    static const Context ctx{"a", "b", "c"};
    return ctx;
}

PolyMatrix sym_phi() { return PolyMatrix::parse(abc(), {{"a", "b"}, {"c", "-a"}}); }

TEST(Isogeny, QuadraticDifferentialSign) {
    EXPECT_EQ(quadratic_differential(sym_phi()), parse_poly("a^2 + b*c", abc()));
    // φ^2 = q·Id.
    EXPECT_EQ(sym_phi() * sym_phi(), quadratic_differential(sym_phi()) * PolyMatrix::identity(abc(), 2));
    EXPECT_THROW(quadratic_differential(PolyMatrix::parse(abc(), {{"a", "b"}, {"c", "a"}})), std::invalid_argument);
}

TEST(Isogeny, TensorFieldLayout) {
    const Context none;
    PolyMatrix p1 = PolyMatrix::from_rationals(none, {{1, 2}, {3, -1}});
    PolyMatrix p2 = PolyMatrix::from_rationals(none, {{0, 1}, {0, 0}});
    // Frame {e⊗e, e⊗f, f⊗e, f⊗f}.
    EXPECT_EQ(tensor_higgs(p1, p2),
              PolyMatrix::from_rationals(none, {{1, 1, 2, 0}, {0, 1, 0, 2}, {3, 0, -1, 1}, {0, 3, 0, -1}}));
    EXPECT_THROW(tensor_higgs(PolyMatrix::identity(none, 2), p2), std::invalid_argument);
}

TEST(Isogeny, FrameForms) {
    auto f = frame_quadforms(abc());
    EXPECT_EQ(f.q1, PolyMatrix::from_rationals(abc(), {{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}}));
    EXPECT_EQ(f.q2, PolyMatrix::from_rationals(abc(), {{2, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -2, 0}, {0, 1, 0, 0}}));
    EXPECT_EQ(f.p.transpose() * f.q1 * f.p, f.q2);
}

TEST(Isogeny, So13Reduction) {
    auto red = so13_reduce(sym_phi());
    EXPECT_TRUE(red.matches_expected);
    EXPECT_EQ(red.beta, PolyMatrix::parse(abc(), {{"-c", "2*a", "b"}}));
    EXPECT_EQ(red.beta_t, PolyMatrix::parse(abc(), {{"2*b"}, {"-2*a"}, {"-2*c"}}));
    EXPECT_TRUE(red.reduced.block(0, 0, 1, 1).is_zero());
    EXPECT_TRUE(red.reduced.block(1, 1, 3, 3).is_zero());
    EXPECT_EQ(red.reduced.block(1, 0, 3, 1), -red.beta_t);
}

TEST(Isogeny, So13NumericAndZero) {
    const Context none;
    EXPECT_EQ(so13_reduce(PolyMatrix::from_rationals(none, {{1, 0}, {0, -1}})).beta,
              PolyMatrix::from_rationals(none, {{0, 2, 0}}));
    EXPECT_TRUE(so13_reduce(PolyMatrix(none, 2, 2)).beta.is_zero());
}

TEST(Isogeny, ReducedCharacteristicIdentity) {
    const PolyMatrix big = tensor_higgs(sym_phi(), -sym_phi());
    auto rc = verify_reduced_ch(big);
    ASSERT_TRUE(rc.c.has_value());
    EXPECT_TRUE(rc.identity_holds);
    EXPECT_EQ(*rc.c, parse_poly("4*a^2 + 4*b*c", abc()));
    EXPECT_EQ(rc.tr2, parse_poly("8*a^2 + 8*b*c", abc()));
    EXPECT_EQ(to_string(char_poly(big).as_poly()), "η^4 - 4*η^2*a^2 - 4*η^2*b*c");
}

TEST(Isogeny, ReducedCharacteristicNumericOracle) {
    // Independent check at integer points: Φ^3 - 4qΦ computed entrywise.
    const Context none;
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<long> c(-6, 6);
    for (int i = 0; i < 20; ++i) {
        long a = c(rng), b = c(rng), cc = c(rng);
        PolyMatrix phi = PolyMatrix::from_rationals(none, {{a, b}, {cc, -a}});
        PolyMatrix big = tensor_higgs(phi, -phi);
        EXPECT_TRUE((big * big * big - Rational(4 * (a * a + b * cc)) * big).is_zero());
    }
}

TEST(Isogeny, ReducedChWithoutScalar) {
    const Context none;
    auto rc = verify_reduced_ch(PolyMatrix::from_rationals(none, {{1, 0}, {0, 2}}));
    EXPECT_FALSE(rc.c.has_value());
    EXPECT_TRUE(verify_reduced_ch(PolyMatrix(none, 3, 3)).identity_holds);
}

TEST(Isogeny, NumericCharPoly) {
    const Context none;
    PolyMatrix phi = PolyMatrix::from_rationals(none, {{1, 0}, {0, -1}});
    EXPECT_EQ(char_poly(tensor_higgs(phi, -phi)).to_string(), "η^4 - 4*η^2");
    EXPECT_EQ(char_poly(tensor_higgs(PolyMatrix(none, 2, 2), PolyMatrix(none, 2, 2))).to_string(), "η^4");
}

TEST(Isogeny, HitchinPoints) {
    const Context ctx{"a1", "b1", "c1", "a2", "b2", "c2"};
    PolyMatrix p1 = PolyMatrix::parse(ctx, {{"a1", "b1"}, {"c1", "-a1"}});
    PolyMatrix p2 = PolyMatrix::parse(ctx, {{"a2", "b2"}, {"c2", "-a2"}});
    const Poly q1 = parse_poly("a1^2 + b1*c1", ctx), q2 = parse_poly("a2^2 + b2*c2", ctx);
    auto sl = hitchin_point_sl2xsl2(p1, p2);
    EXPECT_EQ(sl.first, q1);
    EXPECT_EQ(sl.second, q2);
    QuadForm ww(frame_quadforms(ctx).q1, FormKind::symmetric);
    auto so = hitchin_point_so4(tensor_higgs(p1, p2), ww);
    auto base = base_isogeny_map(q1, q2);
    EXPECT_EQ(so.first, base.first);
    EXPECT_EQ(so.second, -base.second);  // Pf = q2 - q1 in this normalization
}

TEST(Isogeny, HitchinPointRejectsNonSkew) {
    const Context none;
    QuadForm ww(frame_quadforms(none).q1, FormKind::symmetric);
    PolyMatrix m = PolyMatrix::from_rationals(none, {{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    EXPECT_THROW(hitchin_point_so4(m, ww), std::invalid_argument);
}

TEST(Isogeny, BaseMapExamples) {
    const Context qc{"q"};
    const Poly q = Poly::variable(qc, "q"), z(qc);
    EXPECT_EQ(base_isogeny_map(q, q).first, q * Rational(-4));
    EXPECT_TRUE(base_isogeny_map(q, q).second.is_zero());
    EXPECT_EQ(base_isogeny_map(z, q).first, q * Rational(-2));
    EXPECT_EQ(base_isogeny_map(z, q).second, -q);
    EXPECT_TRUE(base_isogeny_map(z, z).first.is_zero());
}

TEST(Isogeny, QTransposeOfIdentityFormsIsTranspose) {
    const Context none;
    PolyMatrix beta = PolyMatrix::from_rationals(none, {{1, 2, 3}});
    QuadForm one(PolyMatrix::identity(none, 1), FormKind::symmetric);
    QuadForm three(PolyMatrix::identity(none, 3), FormKind::symmetric);
    EXPECT_EQ(q_transpose(beta, one, three), beta.transpose());
}

}  // namespace
