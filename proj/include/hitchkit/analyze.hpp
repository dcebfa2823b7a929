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
 * Curve-spec analysis as a list of check results: classification, fiber
 * product, plus image with per-chart kernels, and the optional `expect`.
 */

#ifndef HITCHKIT_ANALYZE_HPP
#define HITCHKIT_ANALYZE_HPP

#include <string>
#include <vector>

#include "hitchkit/checks.hpp"
#include "hitchkit/spectral.hpp"

namespace hitch {

inline std::string describe_components(const std::vector<Component>& cs) {
    std::string s;
    for (const auto& c : cs) {
        if (!s.empty()) s += ", ";
        if (c.multiplicity > 1) s += std::to_string(c.multiplicity);
        s += c.name;
        if (c.genus) s += " (genus " + std::to_string(*c.genus) + ")";
    }
    return s;
}

inline std::string describe_chart(const PlusChart& pc) {
    std::string s = pc.source + " -> " + pc.target;
    s += pc.well_defined ? "; well defined" : "; NOT well defined";
    s += pc.source_smooth ? "; smooth source" : "; singular source";
    if (pc.kernel.generators.empty()) {
        s += "; kernel 0";
    } else {
        s += "; kernel (";
        for (std::size_t i = 0; i < pc.kernel.generators.size(); ++i)
            s += (i ? ", " : "") + to_string(pc.kernel.generators[i].value());
        s += ")";
    }
    if (pc.kernel.status != KernelStatus::solved) s += " [" + std::string(to_string(pc.kernel.status)) + "]";
    if (pc.coimage) s += "; coimage " + *pc.coimage;
    if (pc.blowup) s += "; blow-up " + std::string(to_string(pc.blowup->status));
    if (!pc.blowup_error.empty()) s += "; blow-up precondition: " + pc.blowup_error;
    return s;
}

inline std::vector<CheckResult> analyze_spec(const SpectralCurveSpec& spec, unsigned trunc = 8) {
    detail::CheckList out;
    std::string regime;
    out.run("analyze.classification", "spectral curve classification", [&](CheckResult& r) {
        auto c = classify_spectral_curve(spec);
        regime = c.regime;
        r.witnesses.emplace_back("genus", std::to_string(spec.curve.genus));
        r.witnesses.emplace_back("regime", c.regime);
        r.witnesses.emplace_back("summary", c.summary);
        r.witnesses.emplace_back("components", describe_components(c.components));
        r.witnesses.emplace_back("reduced", c.reduced ? "yes" : "no");
        r.witnesses.emplace_back("smooth", c.smooth ? "yes" : "no");
        for (const auto& s : c.singular)
            r.witnesses.emplace_back("singular." + s.label,
                                     std::string(to_string(s.type)) + " x" + std::to_string(s.count) + ": " + s.detail);
        if (c.normalization_genus) r.witnesses.emplace_back("normalization_genus", std::to_string(*c.normalization_genus));
        if (c.arithmetic_genus) r.witnesses.emplace_back("arithmetic_genus", std::to_string(*c.arithmetic_genus));
    });
    if (spec.q2) {
        out.run("analyze.fiber_product", "S1 x_Σ S2 chart rings", [&](CheckResult& r) {
            auto fp = fiber_product(spec.q1, *spec.q2);
            r.witnesses.emplace_back("kind", fp.kind);
            r.witnesses.emplace_back("summary", fp.summary);
            for (const auto& ch : fp.charts)
                r.witnesses.emplace_back("chart." + ch.label,
                                         ch.ring.describe() + (ch.smooth ? "; smooth" : "; singular"));
        });
        out.run("analyze.plus_image", "image of the plus map S1 x_Σ S2 -> |K|", [&](CheckResult& r) {
            if (pair_regime(spec.q1, *spec.q2) == "proportional") {
                r.status = CheckStatus::inconclusive;
                r.witnesses.emplace_back("regime", "proportional");
                r.witnesses.emplace_back("note", "q1 = λ q2 with λ != 1 is classified but its plus image is not modelled");
                return;
            }
            auto pi = plus_image(spec.q1, *spec.q2, trunc);
            r.witnesses.emplace_back("image", pi.image);
            r.witnesses.emplace_back("summary", pi.summary);
            for (const auto& pc : pi.charts) r.witnesses.emplace_back("chart." + pc.label, describe_chart(pc));
            bool ok = true;
            if (pi.regime == "generic" || pi.regime == "ribbon") ok = pi.normalization_certified;
            for (const auto& pc : pi.charts) {
                ok = ok && pc.well_defined;
                if (pi.regime == "diagonal" || pi.regime == "nilpotent") ok = ok && pc.kernel.generators.size() == 1;
            }
            if (!ok) r.status = CheckStatus::fail;
        });
    }
    if (spec.expect) {
        out.run("analyze.expect", "regime named by the spec's `expect` field", [&](CheckResult& r) {
            r.witnesses.emplace_back("expected", *spec.expect);
            r.witnesses.emplace_back("found", regime.empty() ? "(no classification)" : regime);
            if (regime != *spec.expect) r.status = CheckStatus::fail;
        });
    }
    return out.take();
}

}  // namespace hitch

#endif  // HITCHKIT_ANALYZE_HPP
