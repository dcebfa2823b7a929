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

namespace {

using namespace hitch;

TEST(PolyText, PrinterIsCanonical) {
    const Context ctx{"u", "t"};
    EXPECT_EQ(to_string(parse_poly("t*u + u^3 - 4*t*u - 1/2", ctx)), "u^3 - 3*u*t - 1/2");
    EXPECT_EQ(to_string(Poly(ctx)), "0");
    EXPECT_EQ(to_string(parse_poly("-(u - t)^2", ctx)), "-u^2 + 2*u*t - t^2");
}

TEST(PolyText, UnaryMinusAndNesting) {
    const Context ctx{"x"};
    EXPECT_EQ(parse_poly("-x^2", ctx), -parse_poly("x^2", ctx));
    EXPECT_EQ(parse_poly("((x + 1))*(x - 1)", ctx), parse_poly("x^2 - 1", ctx));
    EXPECT_EQ(parse_poly("2/4*x", ctx), parse_poly("1/2*x", ctx));
}

TEST(PolyText, Utf8AndPrimedNames) {
    const Context ctx{"η", "d'"};
    EXPECT_EQ(to_string(parse_poly("η^2 - d'", ctx)), "η^2 - d'");
}

TEST(PolyText, ErrorsCarryLocation) {
    const Context ctx{"x"};
    try {
        parse_poly("x + * 2", ctx);
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1);
        EXPECT_EQ(e.column(), 5);
    }
    try {
        parse_poly("x + y", ctx, 3, 10);
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_EQ(e.column(), 14);
    }
    EXPECT_THROW(parse_poly("x^", ctx), ParseError);
    EXPECT_THROW(parse_poly("(x + 1", ctx), ParseError);
    EXPECT_THROW(parse_poly("1/0", ctx), ParseError);
    EXPECT_THROW(parse_poly("", ctx), ParseError);
    EXPECT_THROW(parse_poly("x x", ctx), ParseError);
}

TEST(PolyText, RoundTripOnRandomPolynomials) {
    const Context ctx{"u", "v", "t", "q1"};
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
    std::uniform_int_distribution<unsigned> ex(0, 4), nterms(0, 8);
    for (int i = 0; i < 100; ++i) {
        Poly p(ctx);
        for (unsigned k = nterms(rng); k > 0; --k) {
            Exponents e(ctx.size());
            for (auto& x : e) x = ex(rng);
            p += Poly::monomial(ctx, e, Rational(num(rng), den(rng)));
        }
        const std::string text = to_string(p);
        EXPECT_EQ(parse_poly(text, ctx), p) << text;
        EXPECT_EQ(to_string(parse_poly(text, ctx)), text);
    }
}

TEST(PolyText, IdentifiersInOrder) {
    EXPECT_EQ(identifiers_in("b*a + 2*b - c1^2"), (std::vector<std::string>{"b", "a", "c1"}));
    EXPECT_TRUE(identifiers_in("3/4").empty());
}

}  // namespace
