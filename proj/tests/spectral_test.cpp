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

#include "hitchkit/checks.hpp"
#include "hitchkit/numerology.hpp"
#include "hitchkit/poly_text.hpp"
#include "hitchkit/spectral.hpp"

namespace {

using namespace hitch;

Poly tp(const char* s) { return parse_poly(s, chart_context()); }

std::vector<ZeroPoint> simple_zeros(const std::string& prefix, int g) {
    std::vector<ZeroPoint> z;
    for (int i = 1; i <= 4 * g - 4; ++i) z.push_back({prefix + std::to_string(i), 1});
    return z;
}

TEST(QuadDiff, ValidatesDivisorAndCharts) {
    const CurveContext c(2);
    EXPECT_THROW(QuadDiff(c, {{"p", 1}}), std::invalid_argument);
    EXPECT_THROW(QuadDiff(c, {{"p", 2}, {"p", 2}}), std::invalid_argument);
    EXPECT_THROW(QuadDiff(c, {{"p", 0}, {"r", 4}}), std::invalid_argument);
    EXPECT_THROW(QuadDiff(c, simple_zeros("p", 2), {{"p1", tp("t^2")}}), std::invalid_argument);
    EXPECT_THROW(QuadDiff(c, simple_zeros("p", 2), {{"x", tp("t")}}), std::invalid_argument);
    EXPECT_THROW(QuadDiff(c, simple_zeros("p", 2), {{"p1", tp("1 + t")}}), std::invalid_argument);
    EXPECT_THROW(CurveContext(1), std::invalid_argument);
}

TEST(QuadDiff, LocalModels) {
    const CurveContext c(2);
    QuadDiff q(c, {{"p1", 2}, {"p2", 1}, {"p3", 1}}, {{"p2", tp("t + t^2")}});
    EXPECT_EQ(q.local_model("p1"), tp("t^2"));
    EXPECT_EQ(q.local_model("p2"), tp("t + t^2"));
    EXPECT_EQ(q.local_model("elsewhere"), tp("1"));
    EXPECT_TRUE(QuadDiff::zero(c).local_model("p1").is_zero());
    EXPECT_EQ(q.odd_zero_count(), 2u);
}

TEST(PairRegime, AllRegimes) {
    const CurveContext c(2);
    const QuadDiff z = QuadDiff::zero(c);
    const QuadDiff a(c, simple_zeros("p", 2));
    const QuadDiff b(c, simple_zeros("r", 2));
    std::map<std::string, Poly> ch1, ch2;
    for (int i = 1; i <= 4; ++i) {
        ch1.emplace("p" + std::to_string(i), tp("t"));
        ch2.emplace("p" + std::to_string(i), tp("4*t"));
    }
    const QuadDiff a1(c, simple_zeros("p", 2), ch1), a4(c, simple_zeros("p", 2), ch2);
    EXPECT_EQ(pair_regime(z, z), "nilpotent");
    EXPECT_EQ(pair_regime(z, a), "ribbon");
    EXPECT_EQ(pair_regime(a, a), "diagonal");
    EXPECT_EQ(pair_regime(a1, a1), "diagonal");
    EXPECT_EQ(pair_regime(a4, a1), "proportional");
    EXPECT_EQ(pair_regime(a, b), "generic");
    // Same divisor, charts missing on one side: the ratio cannot be read off.
    EXPECT_THROW(pair_regime(a, a4), MissingChart);
}

TEST(Classify, Rank2SmoothAndSingular) {
    for (int g = 2; g <= 5; ++g) {
        const CurveContext c(g);
        auto smooth = classify_spectral_curve({c, QuadDiff(c, simple_zeros("p", g)), std::nullopt, std::nullopt});
        EXPECT_EQ(smooth.normalization_genus, riemann_hurwitz(g, 2, 4 * g - 4));
        EXPECT_EQ(smooth.regime, "smooth");
    }
    const CurveContext c(2);
    auto sing = classify_rank2(QuadDiff(c, {{"p1", 2}, {"p2", 1}, {"p3", 1}}));
    EXPECT_EQ(sing.regime, "singular");
    ASSERT_EQ(sing.singular.size(), 1u);
    EXPECT_EQ(sing.singular[0].type, SingularType::node);
    // Normalization: double cover branched at the two odd zeros.
    EXPECT_EQ(sing.normalization_genus, riemann_hurwitz(2, 2, 2));
    EXPECT_EQ(classify_rank2(QuadDiff(c, {{"p1", 3}, {"p2", 1}})).singular[0].type, SingularType::worse);
}

TEST(Classify, GenericPairGenera) {
    for (int g = 2; g <= 6; ++g) {
        const CurveContext c(g);
        auto k = classify_pair(QuadDiff(c, simple_zeros("p", g)), QuadDiff(c, simple_zeros("r", g)));
        // S1 x_Σ S2 is a 4-sheeted cover with 2 ramification points over each of the 8g-8 zeros.
        EXPECT_EQ(k.normalization_genus, riemann_hurwitz(g, 4, 2 * (8 * g - 8)));
        EXPECT_EQ(k.arithmetic_genus, *k.normalization_genus + 4 * g - 4);
        EXPECT_EQ(k.singular[0].count, static_cast<unsigned>(4 * g - 4));
    }
}

TEST(Classify, SharedZeroIsWorse) {
    const CurveContext c(2);
    QuadDiff a(c, simple_zeros("p", 2), {{"p1", tp("t")}});
    auto zb = simple_zeros("r", 2);
    zb[0].label = "p1";
    QuadDiff b(c, zb, {{"p1", tp("2*t")}});
    auto k = classify_pair(a, b);
    EXPECT_EQ(k.regime, "generic");
    EXPECT_FALSE(k.normalization_genus.has_value());
    bool found = false;
    for (const auto& s : k.singular) found = found || (s.label == "p1" && s.type == SingularType::worse);
    EXPECT_TRUE(found);
}

TEST(Classify, InvariantUnderSquareRescaling) {
    const CurveContext c(3);
    std::map<std::string, Poly> ch, ch9;
    for (int i = 1; i <= 8; ++i) {
        ch.emplace("p" + std::to_string(i), tp("t + t^2"));
        ch9.emplace("p" + std::to_string(i), tp("9*t + 9*t^2"));
    }
    QuadDiff a(c, simple_zeros("p", 3), ch), a9(c, simple_zeros("p", 3), ch9), b(c, simple_zeros("r", 3));
    EXPECT_EQ(classify_rank2(a).summary, classify_rank2(a9).summary);
    EXPECT_EQ(classify_pair(a, b).summary, classify_pair(a9, b).summary);
    EXPECT_EQ(plus_image(a, b).normalization_certified, plus_image(a9, b).normalization_certified);
}

TEST(Classify, ProportionalSplitsForSquareRatio) {
    const CurveContext c(2);
    std::map<std::string, Poly> c1, c4, c2;
    for (int i = 1; i <= 4; ++i) {
        c1.emplace("p" + std::to_string(i), tp("t"));
        c4.emplace("p" + std::to_string(i), tp("4*t"));
        c2.emplace("p" + std::to_string(i), tp("2*t"));
    }
    auto z = simple_zeros("p", 2);
    auto k = classify_pair(QuadDiff(c, z, c4), QuadDiff(c, z, c1));
    ASSERT_EQ(k.components.size(), 2u);
    EXPECT_EQ(classify_pair(QuadDiff(c, z, c2), QuadDiff(c, z, c1)).components.size(), 1u);
    EXPECT_THROW(plus_image(QuadDiff(c, z, c4), QuadDiff(c, z, c1)), std::invalid_argument);
}

TEST(FiberProduct, Kinds) {
    const CurveContext c(2);
    const QuadDiff a(c, simple_zeros("p", 2)), b(c, simple_zeros("r", 2)), z = QuadDiff::zero(c);
    EXPECT_EQ(fiber_product(a, b).kind, "smooth");
    EXPECT_EQ(fiber_product(a, b).charts.size(), 8u);
    EXPECT_EQ(fiber_product(z, a).kind, "split_ribbon");
    EXPECT_EQ(fiber_product(a, a).kind, "diagonal");
    EXPECT_EQ(fiber_product(z, z).kind, "nilpotent");
    auto zb = simple_zeros("r", 2);
    zb[0].label = "p1";
    EXPECT_THROW(fiber_product(a, QuadDiff(c, zb)), MissingChart);
}

TEST(FiberProduct, ProductChartSmoothness) {
    EXPECT_TRUE(product_chart_smooth(tp("t"), tp("1")));
    EXPECT_TRUE(product_chart_smooth(tp("1"), tp("1 + t")));
    EXPECT_FALSE(product_chart_smooth(tp("t"), tp("2*t")));
    EXPECT_FALSE(product_chart_smooth(tp("t^2"), tp("1")));
}

TEST(SplitRibbon, IdealSquaresToZeroAndIsFree) {
    for (const char* q : {"t", "t + t^2", "1"}) {
        auto s = split_ribbon_check(product_chart_ring(Poly(chart_context()), tp(q)));
        EXPECT_TRUE(s.ideal_squares_to_zero) << q;
        EXPECT_TRUE(s.ideal_free_rank_one) << q;
    }
}

TEST(PlusImage, Regimes) {
    const CurveContext c(2);
    const QuadDiff a(c, simple_zeros("p", 2), {{"p1", tp("t")}, {"p2", tp("t*(1 + t)")}, {"p3", tp("t - t^3")}});
    const QuadDiff b(c, simple_zeros("r", 2)), z = QuadDiff::zero(c);
    auto gen = plus_image(a, b);
    EXPECT_TRUE(gen.normalization_certified);
    EXPECT_EQ(gen.image, "S12");
    for (const auto& pc : gen.charts) EXPECT_TRUE(pc.kernel.generators.empty()) << pc.label;
    auto rib = plus_image(z, a);
    EXPECT_TRUE(rib.normalization_certified);
    EXPECT_EQ(rib.image, "2S");
    for (const auto& pc : rib.charts) {
        ASSERT_TRUE(pc.blowup.has_value()) << pc.label;
        EXPECT_EQ(pc.blowup->status, CheckStatus::pass);
    }
    auto dia = plus_image(a, a);
    EXPECT_EQ(dia.image, "Σ ∪ S′");
    for (const auto& pc : dia.charts) {
        ASSERT_EQ(pc.kernel.generators.size(), 1u);
        const RelationSet src = composite_chart_ring(a.local_model(pc.label), a.local_model(pc.label));
        const Poly q = a.local_model(pc.label).embed(src.context());
        EXPECT_EQ(pc.kernel.generators[0].value(), src.poly("u^3") - q * src.poly("4*u")) << pc.label;
    }
    EXPECT_EQ(plus_image(z, z).image, "3Σ");
}

TEST(Modules, ValidateActions) {
    auto r = RelationSet::parse({"u"}, {"t"}, {"u^2 - t"});
    // u acting by 0 violates u^2 = t.
    EXPECT_THROW(LocalModule(r, {PolyMatrix(r.base_context(), 2, 2)}), std::invalid_argument);
    auto r2 = RelationSet::parse({"u", "v"}, {"t"}, {"u^2", "v^2"});
    PolyMatrix a = PolyMatrix::from_rationals(r2.base_context(), {{0, 0}, {1, 0}});
    PolyMatrix b = PolyMatrix::from_rationals(r2.base_context(), {{0, 1}, {0, 0}});
    // Each squares to zero but they do not commute.
    EXPECT_THROW(LocalModule(r2, {a, b}), std::invalid_argument);
}

TEST(Modules, BoxProductRankIsMultiplicative) {
    const std::vector<std::string> rels1{"u - t", "u^2 - t", "u^3 - t*u + 1"};
    const std::vector<std::string> rels2{"v^2 - t - 1", "v^4 - t", "v"};
    for (const auto& x : rels1)
        for (const auto& y : rels2) {
            auto m1 = free_module(RelationSet::parse({"u"}, {"t"}, {x}));
            auto m2 = free_module(RelationSet::parse({"v"}, {"t"}, {y}));
            EXPECT_EQ(box_product(m1, m2).rank(), m1.rank() * m2.rank());
            EXPECT_EQ(box_product(zero_module(m1.ring()), m2).rank(), 0u);
        }
    auto r = RelationSet::parse({"u"}, {"t"}, {"u^2 - t"});
    EXPECT_THROW(box_product(free_module(r), free_module(r)), std::invalid_argument);
}

TEST(Modules, BoxProductOfFreesIsFreeOnTheProduct) {
    auto m = box_product(free_module(RelationSet::parse({"u"}, {"t"}, {"u^2 - t"})),
                         free_module(RelationSet::parse({"v"}, {"t"}, {"v^2 - 2*t"})));
    EXPECT_EQ(m.actions(), free_module(m.ring()).actions());
}

TEST(DirectImage, CayleyHamiltonForRandomTheta) {
    auto r = RelationSet::parse({"u", "v"}, {"t"}, {"u^2 - t", "v^2 - t - 1"});
    auto m = free_module(r);
    std::mt19937_64 rng(72);
    std::uniform_int_distribution<long> c(-3, 3);
    for (int i = 0; i < 10; ++i) {
        Poly theta = r.poly("u") * Rational(c(rng)) + r.poly("v") * Rational(c(rng)) + r.poly("u*v") * Rational(c(rng));
        auto di = direct_image_higgs(m, theta);
        // χ(θ) = 0 in the ring: evaluate the char poly at θ and reduce.
        Poly acc(r.context()), power = r.constant(Rational(1));
        for (const auto& coef : di.charpoly.coefficients()) {
            acc += coef.embed(r.context()) * power;
            power = r.normal_form(power * theta);
        }
        EXPECT_TRUE(r.normal_form(acc).is_zero());
        EXPECT_EQ(di.rank, 4u);
    }
}

TEST(DirectImage, ZeroModule) {
    auto r = RelationSet::parse({"u"}, {"t"}, {"u^2 - t"});
    auto di = direct_image_higgs(zero_module(r), r.poly("u"));
    EXPECT_EQ(di.rank, 0u);
    EXPECT_EQ(di.charpoly.degree(), 0u);
}

TEST(DiagonalRestriction, Examples) {
    EXPECT_EQ(diagonal_restriction(0), std::make_pair(0L, 0L));
    EXPECT_EQ(diagonal_restriction(3), std::make_pair(0L, 6L));
    EXPECT_EQ(diagonal_restriction(2), std::make_pair(0L, 4L));
}

}  // namespace
