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
 * Text and structured (JSON Lines) rendering of check results.
 *
 * Structured form, one object per line:
 *   {"record":"check","id":...,"status":...,"anchor":...,"witnesses":[[key,value],...]}
 *   {"record":"summary","pass":n,"fail":n,"flagged":n,"inconclusive":n}
 */

#ifndef HITCHKIT_REPORT_HPP
#define HITCHKIT_REPORT_HPP

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hitchkit/checks.hpp"

namespace hitch {

inline CheckStatus parse_check_status(const std::string& s) {
    for (CheckStatus c : {CheckStatus::pass, CheckStatus::fail, CheckStatus::flagged, CheckStatus::inconclusive})
        if (to_string(c) == s) return c;
    throw std::invalid_argument("unknown status '" + s + "'");
}

struct StatusCounts {
    std::size_t pass = 0, fail = 0, flagged = 0, inconclusive = 0;
};

inline StatusCounts count_statuses(const std::vector<CheckResult>& rs) {
    StatusCounts c;
    for (const auto& r : rs) {
        switch (r.status) {
            case CheckStatus::pass: ++c.pass; break;
            case CheckStatus::fail: ++c.fail; break;
            case CheckStatus::flagged: ++c.flagged; break;
            case CheckStatus::inconclusive: ++c.inconclusive; break;
        }
    }
    return c;
}

inline nlohmann::ordered_json to_json(const CheckResult& r) {
    nlohmann::ordered_json j;
    j["record"] = "check";
    j["id"] = r.id;
    j["status"] = to_string(r.status);
    j["anchor"] = r.anchor;
    j["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& [k, v] : r.witnesses) j["witnesses"].push_back({k, v});
    return j;
}

inline void write_structured(std::ostream& os, const std::vector<CheckResult>& rs) {
    for (const auto& r : rs) os << to_json(r).dump() << '\n';
    const StatusCounts c = count_statuses(rs);
    nlohmann::ordered_json s;
    s["record"] = "summary";
    s["pass"] = c.pass;
    s["fail"] = c.fail;
    s["flagged"] = c.flagged;
    s["inconclusive"] = c.inconclusive;
    os << s.dump() << '\n';
}

/// Recovers the check records of a structured report; summary lines are skipped.
inline std::vector<CheckResult> parse_structured(const std::string& text) {
    std::vector<CheckResult> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument("line " + std::to_string(number) + ": " + e.what());
        }
        if (j.value("record", "") != "check") continue;
        CheckResult r;
        r.id = j.at("id").get<std::string>();
        r.status = parse_check_status(j.at("status").get<std::string>());
        r.anchor = j.at("anchor").get<std::string>();
        for (const auto& w : j.at("witnesses")) r.witnesses.emplace_back(w.at(0).get<std::string>(), w.at(1).get<std::string>());
        out.push_back(std::move(r));
    }
    return out;
}

inline std::string status_tag(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "[PASS]";
        case CheckStatus::fail: return "[FAIL]";
        case CheckStatus::flagged: return "[FLAG]";
        case CheckStatus::inconclusive: return "[INCONCLUSIVE]";
    }
    return "[?]";
}

/// Human-readable report; flagged checks are repeated in their own section.
inline void write_text(std::ostream& os, const std::vector<CheckResult>& rs, bool verbose = false) {
    for (const auto& r : rs) {
        os << status_tag(r.status) << ' ' << r.id << "  " << r.anchor << '\n';
        if (verbose || r.status != CheckStatus::pass)
            for (const auto& [k, v] : r.witnesses) os << "    " << k << ": " << v << '\n';
    }
    std::vector<const CheckResult*> flagged;
    for (const auto& r : rs)
        if (r.status == CheckStatus::flagged) flagged.push_back(&r);
    if (!flagged.empty()) {
        os << "\nflagged deviations:\n";
        for (const auto* r : flagged) os << "  " << r->id << '\n';
    }
    const StatusCounts c = count_statuses(rs);
    os << "\n" << rs.size() << " checks: " << c.pass << " pass, " << c.fail << " fail, " << c.flagged << " flagged, "
       << c.inconclusive << " inconclusive\n";
}

}  // namespace hitch

#endif  // HITCHKIT_REPORT_HPP
