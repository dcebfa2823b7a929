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

#include <set>
#include <string>

#include "hitchkit/analyze.hpp"
#include "hitchkit/checks.hpp"
#include "hitchkit/curve_spec.hpp"

#ifndef HITCHKIT_FIXTURE_DIR
#error "HITCHKIT_FIXTURE_DIR must be defined"
#endif

namespace {

using namespace hitch;

std::string fixture(const std::string& name) { return std::string(HITCHKIT_FIXTURE_DIR) + "/" + name; }

const std::set<std::string> kFlagged{"matrix.trace_normalization", "numerology.prym_audit.dprime"};

class SuiteTest : public ::testing::TestWithParam<int> {};

TEST_P(SuiteTest, NoFailuresAndOnlyKnownFlags) {
    SuiteConfig cfg;
    cfg.genus = GetParam();
    for (const auto& suite : suite_names()) {
        for (const auto& r : run_suite(suite, cfg)) {
            EXPECT_EQ(r.id.rfind(suite + ".", 0), 0u) << r.id;
            if (kFlagged.count(r.id)) {
                EXPECT_EQ(r.status, CheckStatus::flagged) << r.id;
            } else {
                EXPECT_EQ(r.status, CheckStatus::pass) << r.id << "\n" << (r.witnesses.empty() ? "" : r.witnesses[0].second);
            }
            EXPECT_FALSE(r.anchor.empty()) << r.id;
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Genus, SuiteTest, ::testing::Values(2, 3, 4));

TEST(Suites, AllIsSortedUnionWithUniqueIds) {
    SuiteConfig cfg;
    auto all = run_suite("all", cfg);
    std::size_t parts = 0;
    for (const auto& s : suite_names()) parts += run_suite(s, cfg).size();
    EXPECT_EQ(all.size(), parts);
    std::set<std::string> ids;
    for (std::size_t i = 0; i < all.size(); ++i) {
        EXPECT_TRUE(ids.insert(all[i].id).second) << all[i].id;
        if (i) {
            EXPECT_LT(all[i - 1].id, all[i].id);
        }
    }
    for (const auto& f : kFlagged) EXPECT_TRUE(ids.count(f)) << f;
    EXPECT_FALSE(has_failures(all));
}

TEST(Suites, DeterministicForSeed) {
    SuiteConfig a, b;
    a.seed = b.seed = 99;
    EXPECT_EQ(run_suite("ring", a), run_suite("ring", b));
    EXPECT_EQ(run_suite("geometry", a), run_suite("geometry", b));
}

TEST(Suites, OtherSeedsStillPass) {
    for (unsigned long long seed : {2ULL, 3ULL, 12345ULL}) {
        SuiteConfig cfg;
        cfg.seed = seed;
        EXPECT_FALSE(has_failures(run_suite("all", cfg))) << seed;
    }
}

TEST(Suites, UnknownSuiteThrows) { EXPECT_THROW(run_suite("rings", SuiteConfig{}), std::invalid_argument); }

TEST(Suites, ExceptionBecomesFailure) {
    detail::CheckList l;
    l.run("x.throws", "anchor", [](CheckResult&) { throw std::runtime_error("boom"); });
    l.run("x.silent_fail", "anchor", [](CheckResult& r) { r.status = CheckStatus::fail; });
    auto rs = l.take();
    ASSERT_EQ(rs.size(), 2u);
    EXPECT_EQ(rs[0].status, CheckStatus::fail);
    EXPECT_EQ(rs[0].witnesses.at(0).second, "boom");
    EXPECT_FALSE(rs[1].witnesses.empty());
    EXPECT_TRUE(has_failures(rs));
}

std::map<std::string, CheckStatus> statuses(const std::vector<CheckResult>& rs) {
    std::map<std::string, CheckStatus> m;
    for (const auto& r : rs) m[r.id] = r.status;
    return m;
}

TEST(Analyze, Fixtures) {
    for (const char* name : {"generic.spec", "diagonal.spec", "ribbon.spec", "smooth.spec", "nilpotent.spec"}) {
        auto rs = analyze_spec(load_curve_spec(fixture(name)));
        for (const auto& r : rs) EXPECT_EQ(r.status, CheckStatus::pass) << name << " " << r.id;
        EXPECT_TRUE(statuses(rs).count("analyze.expect")) << name;
    }
    auto smooth = statuses(analyze_spec(load_curve_spec(fixture("smooth.spec"))));
    EXPECT_FALSE(smooth.count("analyze.plus_image"));
}

TEST(Analyze, WrongExpectFails) {
    auto m = statuses(analyze_spec(load_curve_spec(fixture("wrong_expect.spec"))));
    EXPECT_EQ(m.at("analyze.expect"), CheckStatus::fail);
    EXPECT_EQ(m.at("analyze.classification"), CheckStatus::pass);
}

TEST(Analyze, ProportionalIsInconclusive) {
    auto spec = parse_curve_spec("genus: 2\nq1:\n  a: 4*t\n  b: 4*t\n  c: 4*t\n  d: 4*t\nq2:\n  a: t\n  b: t\n  c: t\n  d: t\n");
    auto m = statuses(analyze_spec(spec));
    EXPECT_EQ(m.at("analyze.plus_image"), CheckStatus::inconclusive);
    EXPECT_EQ(m.at("analyze.classification"), CheckStatus::pass);
}

TEST(Analyze, MissingChartIsReportedAsFailure) {
    auto m = statuses(analyze_spec(load_curve_spec(fixture("missing_chart.spec"))));
    EXPECT_EQ(m.at("analyze.fiber_product"), CheckStatus::fail);
}

}  // namespace
