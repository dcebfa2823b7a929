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

#include "hitchkit/poly_text.hpp"
#include "hitchkit/quotient_ring.hpp"
#include "hitchkit/spectral.hpp"

namespace {

using namespace hitch;

Rational eval_at(const Poly& p, const std::vector<Rational>& pt) {
    Rational acc(0);
    for (const auto& [e, c] : p.terms()) {
        Rational m = c;
        for (std::size_t i = 0; i < e.size(); ++i) m *= hitch::pow(pt[i], e[i]);
        acc += m;
    }
    return acc;
}

Poly random_fiber_poly(std::mt19937_64& rng, const Context& ctx) {
    std::uniform_int_distribution<long> coef(-5, 5);
    std::uniform_int_distribution<unsigned> ex(0, 5);
    Poly p(ctx);
    for (int k = 0; k < 6; ++k) {
        Exponents e(ctx.size());
        for (auto& x : e) x = ex(rng);
        p += Poly::monomial(ctx, e, Rational(coef(rng)));
    }
    return p;
}

TEST(RelationSet, RejectsBadPresentations) {
    EXPECT_THROW(RelationSet::parse({"u"}, {"t"}, {"2*u^2 - t"}), std::invalid_argument);
    EXPECT_THROW(RelationSet::parse({"u", "v"}, {"t"}, {"u^2 - t", "v^2 - u"}), std::invalid_argument);
    EXPECT_THROW(RelationSet::parse({"u"}, {"t"}, {"t^2"}), std::invalid_argument);
    EXPECT_THROW(RelationSet::parse({"u"}, {"t"}, {"t*u^2 - 1"}), std::invalid_argument);
    EXPECT_THROW(RelationSet::parse({"u", "v"}, {"t"}, {"u^2"}), std::invalid_argument);
}

TEST(RelationSet, BasisAndDescription) {
    auto r = RelationSet::parse({"u", "v"}, {"t"}, {"u^2 - t", "v^3 - t"});
    EXPECT_EQ(r.rank_over_base(), 6u);
    auto b = r.basis();
    EXPECT_EQ(to_string(r.basis_element(b[0])), "1");
    EXPECT_EQ(to_string(r.basis_element(b[1])), "u");
    EXPECT_EQ(to_string(r.basis_element(b[2])), "v");
    EXPECT_EQ(RelationSet::parse({"u"}, {"t"}, {"u^3 - 4*t*u"}).describe(), "Q[t][u]/(u^3 - 4*u*t)");
}

// Oracle: a reduced representative takes the same value as p at every point
// of the variety. With q1 = 9/4 and q2 = 25 the four points are (±3/2, ±5).
TEST(RelationSet, NormalFormAgreesOnTheVariety) {
    auto r = RelationSet::parse({"u", "v"}, {"q1", "q2"}, {"u^2 - q1", "v^2 - q2"});
    std::mt19937_64 rng(21);
    for (int i = 0; i < 40; ++i) {
        Poly p = random_fiber_poly(rng, r.context());
        Poly nf = r.normal_form(p);
        EXPECT_TRUE(r.is_reduced(nf));
        for (int su : {-1, 1})
            for (int sv : {-1, 1}) {
                std::vector<Rational> pt{Rational(3 * su, 2), Rational(5 * sv), Rational(9, 4), Rational(25)};
                EXPECT_EQ(eval_at(nf, pt), eval_at(p, pt));
            }
    }
}

TEST(RelationSet, TriangularNormalForm) {
    // u^2 = v, v^2 = t; at t = 16 the points are (±2, 4).
    auto r = RelationSet::parse({"u", "v"}, {"t"}, {"u^2 - v", "v^2 - t"});
    std::mt19937_64 rng(22);
    for (int i = 0; i < 30; ++i) {
        Poly p = random_fiber_poly(rng, r.context());
        Poly nf = r.normal_form(p);
        for (int su : {-1, 1}) {
            std::vector<Rational> pt{Rational(2 * su), Rational(4), Rational(16)};
            EXPECT_EQ(eval_at(nf, pt), eval_at(p, pt));
        }
    }
    EXPECT_EQ(r.normal_form(r.poly("u^4")), r.poly("t"));
}

TEST(RelationSet, NormalFormIsIdempotentAndMultiplicative) {
    auto r = RelationSet::parse({"u", "v"}, {"t"}, {"u^2 - t", "v^2 - t - 1"});
    std::mt19937_64 rng(23);
    for (int i = 0; i < 30; ++i) {
        Poly a = random_fiber_poly(rng, r.context()), b = random_fiber_poly(rng, r.context());
        EXPECT_EQ(r.normal_form(r.normal_form(a)), r.normal_form(a));
        EXPECT_EQ(r.normal_form(a * b), r.normal_form(r.normal_form(a) * r.normal_form(b)));
        EXPECT_EQ(r.from_coordinates(r.coordinates(r.normal_form(a))), r.normal_form(a));
    }
}

TEST(RingMorphism, RequiresEveryFiberImage) {
    auto s = RelationSet::parse({"u"}, {"t"}, {"u^2 - t"});
    EXPECT_THROW(RingMorphism(s, s, {}), std::invalid_argument);
    EXPECT_THROW(RingMorphism::parse(s, s, {{"w", "u"}}), std::invalid_argument);
    EXPECT_TRUE(RingMorphism::identity(s).base_preserved());
    EXPECT_FALSE(RingMorphism::parse(s, s, {{"u", "u"}, {"t", "t + 1"}}).base_preserved());
}

TEST(RingMorphism, WellDefinedWitness) {
    auto m = RingMorphism::parse(RelationSet::parse({"u"}, {"t"}, {"u^2"}),
                                 RelationSet::parse({"u"}, {"t"}, {"u^2 - t"}), {{"u", "u"}});
    auto rep = check_well_defined(m);
    ASSERT_FALSE(rep.ok);
    ASSERT_EQ(rep.witnesses.size(), 1u);
    EXPECT_EQ(to_string(rep.witnesses.front().second), "t");
}

TEST(RingMorphism, KernelOnNonBasePreservingMapThrows) {
    auto s = RelationSet::parse({"u"}, {"t"}, {"u^2 - t"});
    auto m = RingMorphism::parse(s, s, {{"u", "u"}, {"t", "t"}});
    EXPECT_THROW(kernel_conditions(m, 2), std::invalid_argument);
}

// Frozen values: the elimination ideal of (u^2 - q̄1, v^2 - q̄2, w - u - v)
// in w, computed by an independent lex Groebner basis.
TEST(PlusKernel, MatchesEliminationOracle) {
    const Context& t = chart_context();
    {
        const Poly q = parse_poly("t + t^2", t);
        auto m = plus_comorphism(q, q);
        auto k = kernel_conditions(m, default_degree_bound(q, q));
        ASSERT_EQ(k.generators.size(), 1u);
        EXPECT_EQ(k.status, KernelStatus::solved);
        EXPECT_EQ(k.generators[0].value(), m.source().poly("u*(u^2 - 4*t^2 - 4*t)"));
    }
    {
        // Elimination gives (w^2 - t)^2, already the source relation.
        auto m = plus_comorphism(Poly(t), parse_poly("t", t));
        EXPECT_EQ(m.source().relations()[0], m.source().poly("(u^2 - t)^2"));
        EXPECT_TRUE(kernel_conditions(m, 3).generators.empty());
    }
    {
        // Elimination gives w^4 - 4tw^2 - 2w^2 + 1, the source relation.
        auto m = plus_comorphism(parse_poly("t", t), parse_poly("t + 1", t));
        EXPECT_EQ(m.source().relations()[0], m.source().poly("u^4 - 4*t*u^2 - 2*u^2 + 1"));
        EXPECT_TRUE(kernel_conditions(m, 3).generators.empty());
    }
    {
        auto m = plus_comorphism(Poly(t), Poly(t));
        auto k = kernel_conditions(m, 2);
        ASSERT_EQ(k.generators.size(), 1u);
        EXPECT_EQ(k.generators[0].value(), m.source().poly("u^3"));
    }
}

TEST(PlusKernel, GeneratorsMapToZero) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> c(-4, 4);
    const Context& t = chart_context();
    for (int i = 0; i < 8; ++i) {
        Poly q = parse_poly("t", t) * Rational(c(rng) == 0 ? 1 : c(rng)) + parse_poly("t^2", t) * Rational(c(rng));
        auto m = plus_comorphism(q, q);
        auto k = kernel_conditions(m, default_degree_bound(q, q));
        ASSERT_FALSE(k.generators.empty());
        for (const auto& g : k.generators) EXPECT_TRUE(m.apply(g).is_zero());
    }
}

TEST(PlusKernel, CoimageIsADiagonalQuotient) {
    const Context& t = chart_context();
    const Poly q = parse_poly("t", t);
    auto m = plus_comorphism(q, q);
    auto k = kernel_conditions(m, 2);
    RelationSet co = coimage(m, k);
    EXPECT_EQ(co.describe(), "Q[t][u]/(u^3 - 4*u*t)");
    EXPECT_TRUE(check_well_defined(restrict_to_coimage(m, co)).ok);
    EXPECT_TRUE(kernel_conditions(restrict_to_coimage(m, co), 2).generators.empty());
}

TEST(PlusKernel, MultivariateBaseIsConditionsOnly) {
    auto s = RelationSet::parse({"u"}, {"a", "b"}, {"u^3"});
    auto tg = RelationSet::parse({"u"}, {"a", "b"}, {"u^2"});
    auto k = kernel_conditions(RingMorphism::parse(s, tg, {{"u", "u"}}), 2);
    EXPECT_EQ(k.status, KernelStatus::conditions_only);
    EXPECT_FALSE(k.generators.empty());
}

TEST(Involution, RejectsNonInvolutions) {
    auto r = RelationSet::parse({"u", "v"}, {"t"}, {"u^2 - t", "v^2 - t"});
    EXPECT_THROW(RingInvolution(RingMorphism::parse(r, r, {{"u", "v"}, {"v", "-u"}})), NotAnInvolution);
    EXPECT_THROW(RingInvolution(RingMorphism::parse(r, r, {{"u", "u + 1"}, {"v", "v"}})), NotAnInvolution);
}

TEST(Involution, EigenspacesSpanTheRing) {
    auto r = RelationSet::parse({"u", "v"}, {"t"}, {"u^2 - t", "v^2 - t - 1"});
    RingInvolution s(RingMorphism::parse(r, r, {{"u", "-u"}, {"v", "-v"}}));
    auto split = involution_decompose(s);
    EXPECT_EQ(split.invariant.size() + split.anti_invariant.size(), r.rank_over_base());
    for (const auto& e : split.invariant) EXPECT_EQ(s.map().apply(e), e);
    for (const auto& e : split.anti_invariant) EXPECT_EQ(s.map().apply(e).value(), -e.value());
}

TEST(DiagonalIdeals, QuotientsAreCopiesOfS) {
    auto r = RelationSet::parse({"u", "v"}, {"t"}, {"u^2 - t - t^2", "v^2 - t - t^2"});
    auto d = diagonal_ideals(r);
    EXPECT_EQ(d.plus.quotient.describe(), "Q[t][w]/(w^2 - t^2 - t)");
    EXPECT_EQ(d.minus.quotient, d.plus.quotient);
    EXPECT_EQ(d.plus.generator.value(), r.poly("u - v"));
    EXPECT_EQ(d.minus.generator.value(), r.poly("u + v"));
}

}  // namespace
