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

#include <sstream>

#include "hitchkit/report.hpp"

namespace {

using namespace hitch;

std::vector<CheckResult> sample() {
    return {
        {"a.pass", CheckStatus::pass, {{"x", "1"}}, "first anchor"},
        {"b.fail", CheckStatus::fail, {{"got", "η^4 - 4*η^2"}, {"want", "Σ ∪ S′"}}, "quotes \" and \\ survive"},
        {"c.flag", CheckStatus::flagged, {{"computed", "8*q"}, {"claimed", "4*q"}}, "trace normalization"},
        {"d.inc", CheckStatus::inconclusive, {}, "tab\there"},
    };
}

TEST(Report, StructuredRoundTrip) {
    std::ostringstream os;
    write_structured(os, sample());
    EXPECT_EQ(parse_structured(os.str()), sample());
}

TEST(Report, StructuredSummaryLine) {
    std::ostringstream os;
    write_structured(os, sample());
    const std::string text = os.str();
    const auto last = text.substr(text.rfind('\n', text.size() - 2) + 1);
    EXPECT_EQ(last, "{\"record\":\"summary\",\"pass\":1,\"fail\":1,\"flagged\":1,\"inconclusive\":1}\n");
    EXPECT_EQ(text.find("{\"record\":\"check\",\"id\":\"a.pass\",\"status\":\"pass\""), 0u);
}

TEST(Report, ParseSkipsOtherRecordsAndBlankLines) {
    const std::string text =
        "\n{\"record\":\"stratum\",\"tag\":\"N\"}\n"
        "{\"record\":\"check\",\"id\":\"z\",\"status\":\"flagged\",\"anchor\":\"\",\"witnesses\":[[\"k\",\"v\"]]}\n";
    auto rs = parse_structured(text);
    ASSERT_EQ(rs.size(), 1u);
    EXPECT_EQ(rs[0].status, CheckStatus::flagged);
    EXPECT_EQ(rs[0].witnesses, (Witnesses{{"k", "v"}}));
}

TEST(Report, BadInputThrows) {
    try {
        parse_structured("{\"record\":\"summary\"}\n{not json\n");
        ADD_FAILURE();
    } catch (const std::invalid_argument& e) {
        EXPECT_EQ(std::string(e.what()).rfind("line 2:", 0), 0u) << e.what();
    }
    EXPECT_THROW(parse_structured("{\"record\":\"check\",\"id\":\"z\",\"status\":\"maybe\",\"anchor\":\"\",\"witnesses\":[]}"),
                 std::invalid_argument);
    EXPECT_THROW(parse_check_status("PASS"), std::invalid_argument);
}

TEST(Report, TextOutput) {
    std::ostringstream os;
    write_text(os, sample());
    const std::string t = os.str();
    EXPECT_NE(t.find("[PASS] a.pass  first anchor\n"), std::string::npos);
    EXPECT_EQ(t.find("    x: 1"), std::string::npos);  // pass witnesses hidden
    EXPECT_NE(t.find("[FAIL] b.fail"), std::string::npos);
    EXPECT_NE(t.find("    want: Σ ∪ S′\n"), std::string::npos);
    EXPECT_NE(t.find("[INCONCLUSIVE] d.inc"), std::string::npos);
    EXPECT_NE(t.find("flagged deviations:\n  c.flag\n"), std::string::npos);
    EXPECT_NE(t.find("4 checks: 1 pass, 1 fail, 1 flagged, 1 inconclusive\n"), std::string::npos);

    std::ostringstream v;
    write_text(v, sample(), true);
    EXPECT_NE(v.str().find("    x: 1\n"), std::string::npos);
}

TEST(Report, NoFlaggedSection) {
    std::ostringstream os;
    write_text(os, {sample()[0]});
    EXPECT_EQ(os.str().find("flagged deviations"), std::string::npos);
}

TEST(Report, Counts) {
    auto c = count_statuses(sample());
    EXPECT_EQ(c.pass + c.fail + c.flagged + c.inconclusive, 4u);
    for (auto s : {CheckStatus::pass, CheckStatus::fail, CheckStatus::flagged, CheckStatus::inconclusive})
        EXPECT_EQ(parse_check_status(to_string(s)), s);
}

}  // namespace
