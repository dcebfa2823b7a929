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
 * Local check that the plus map 2Σ ×_Σ S -> 2S is a blow-up at a simple zero
 * of q̄ (re-centered at t = 0).
 *
 *   A  = Q[[u,t]]/((u^2 - q̄)^2)   ring of the ribbon 2S
 *   T  = Q[[u,e]]/(e^2)            its chart model,  alpha: A -> T
 *   Y  = Q[[x,y,t]]/(x^2, y^2 - q̄) ring of 2Σ x_Σ S
 *   T~ = Q[[U,E]]/(E^2)            its chart model,  beta:  Y -> T~
 *
 * alpha sends t to tau(u^2 - e) and beta sends t to tau(U(U - E)), where tau
 * is the compositional inverse of q̄. The induced map T -> T~ must be
 * u -> U, e -> U*E.
 */

#ifndef HITCHKIT_BLOWUP_HPP
#define HITCHKIT_BLOWUP_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hitchkit/poly.hpp"
#include "hitchkit/poly_text.hpp"
#include "hitchkit/quotient_ring.hpp"
#include "hitchkit/series.hpp"

namespace hitch {

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class CheckStatus { pass, fail, flagged, inconclusive };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::flagged: return "flagged";
        case CheckStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

struct BlowupStep {
    std::string name;
    bool ok = true;
    std::vector<std::string> witnesses;
};

struct BlowupReport {
    CheckStatus status = CheckStatus::pass;
    unsigned order = 0;
    std::string tau;          // compositional inverse of q̄, in s
    std::string image_u;      // composite image of u
    std::string image_e;      // composite image of e
    bool composite_exact = false;
    std::vector<BlowupStep> steps;
};

/// Runs the three blow-up checks for q̄ (univariate in `t`) at truncation
/// order N. Throws PreconditionError unless q̄ has a simple zero at t = 0.
inline BlowupReport verify_blowup_local(const Poly& qbar_in, unsigned N) {
    const Context tctx{"t"};
    const Poly qbar = qbar_in.embed(tctx);
    if (!qbar.constant_term().is_zero()) throw PreconditionError("q̄(0) must vanish");
    if (qbar.is_zero()) throw PreconditionError("q̄ is identically zero");
    const Poly g = gcd_univariate(qbar, qbar.derivative(0));
    if (g.constant_term().is_zero())
        throw PreconditionError("q̄ has a multiple zero at t = 0 (gcd(q̄, q̄') = " + to_string(g) + ")");

    BlowupReport rep;
    rep.order = N;
    if (N < 3) {
        rep.status = CheckStatus::inconclusive;
        rep.steps.push_back({"truncation", false, {"order " + std::to_string(N) + " hides t, which has weight 2"}});
        return rep;
    }

    const Context sctx{"s"};
    const Poly tau = inverse_series(qbar.evaluate_into(sctx, {Poly::variable(sctx, "s")}), 0, N);
    rep.tau = to_string(tau);

    auto qbar_in_ctx = [&](const Context& ctx) { return qbar.evaluate_into(ctx, {Poly::variable(ctx, "t")}); };

    Context actx{"u", "t"};
    const Poly au = Poly::variable(actx, "u");
    const Poly aq = qbar_in_ctx(actx);
    RelationSet A({"u"}, {"t"}, {(au * au - aq).pow(2)});

    RelationSet T({"e"}, {"u"}, {Poly::variable(Context{"e", "u"}, "e").pow(2)});

    Context yctx{"x", "y", "t"};
    const Poly yx = Poly::variable(yctx, "x"), yy = Poly::variable(yctx, "y");
    RelationSet Y({"x", "y"}, {"t"}, {yx * yx, yy * yy - qbar_in_ctx(yctx)});

    RelationSet Tt({"E"}, {"U"}, {Poly::variable(Context{"E", "U"}, "E").pow(2)});

    SeriesRing sA(A, {{"u", 1}, {"t", 2}}, N);
    SeriesRing sT(T, {{"u", 1}, {"e", 2}}, N);
    SeriesRing sY(Y, {{"x", 1}, {"y", 1}, {"t", 2}}, N);
    SeriesRing sTt(Tt, {{"U", 1}, {"E", 1}}, N);

    const Poly u = sT.var("u"), e = sT.var("e");
    const Poly U = sTt.var("U"), E = sTt.var("E");
    const Rational half(1, 2);

    SeriesMorphism alpha(&sA, &sT, {{"u", u}, {"t", sT.evaluate(tau, {u * u - e})}});
    SeriesMorphism alpha_inv(&sT, &sA, {{"u", sA.var("u")}, {"e", sA.var("u").pow(2) - qbar_in_ctx(actx)}});
    SeriesMorphism beta(&sY, &sTt,
                        {{"x", E * half}, {"y", U - E * half}, {"t", sTt.evaluate(tau, {U * (U - E)})}});
    SeriesMorphism beta_inv(&sTt, &sY, {{"U", sY.var("x") + sY.var("y")}, {"E", sY.var("x") * Rational(2)}});

    auto well_defined = [&](const std::string& name, const SeriesMorphism& m) {
        BlowupStep step{name + " well-defined", true, {}};
        for (const Poly& rel : m.source().ring().relations()) {
            Poly r = m.apply(rel);
            if (!r.is_zero()) {
                step.ok = false;
                step.witnesses.push_back(to_string(rel) + " -> " + to_string(r));
            }
        }
        rep.steps.push_back(std::move(step));
    };
    auto round_trip = [&](const std::string& name, const SeriesMorphism& first, const SeriesMorphism& second) {
        BlowupStep step{name + " is the identity mod order " + std::to_string(N), true, {}};
        const SeriesRing& ring = first.source();
        for (const auto& gen : ring.context().names()) {
            Poly x = ring.var(gen);
            Poly back = second.apply(first.apply(x));
            if (!(back == ring.reduce(x))) {
                step.ok = false;
                step.witnesses.push_back(gen + " -> " + to_string(back));
            }
        }
        rep.steps.push_back(std::move(step));
    };

    well_defined("alpha", alpha);
    well_defined("alpha^-1", alpha_inv);
    well_defined("beta", beta);
    well_defined("beta^-1", beta_inv);
    round_trip("alpha^-1 . alpha", alpha, alpha_inv);
    round_trip("alpha . alpha^-1", alpha_inv, alpha);
    round_trip("beta^-1 . beta", beta, beta_inv);
    round_trip("beta . beta^-1", beta_inv, beta);

    // Composite T -> A -> Y -> T~, computed without truncation: plus sends
    // the images of u and e to t-free elements of Y, so beta is polynomial on them.
    RingMorphism plus(A, Y, {{"u", yx + yy}});
    BlowupStep plus_ok{"plus well-defined", check_well_defined(plus).ok, {}};
    for (const auto& [rel, res] : check_well_defined(plus).witnesses)
        plus_ok.witnesses.push_back(to_string(rel) + " -> " + to_string(res));
    rep.steps.push_back(std::move(plus_ok));

    const Poly img_u_A = A.var("u");
    const Poly img_e_A = A.var("u").pow(2) - qbar_in_ctx(actx);
    const Poly img_u_Y = plus.apply_raw(img_u_A);
    const Poly img_e_Y = plus.apply_raw(img_e_A);
    const std::size_t yt = Y.context().require("t");
    rep.composite_exact = !img_u_Y.uses(yt) && !img_e_Y.uses(yt);
    BlowupStep comp{"composite is u -> U, e -> U*E", rep.composite_exact, {}};
    if (rep.composite_exact) {
        const Context tt = Tt.context();
        std::vector<Poly> exact_images{Poly::variable(tt, "E") * half,
                                       Poly::variable(tt, "U") - Poly::variable(tt, "E") * half,
                                       Poly(tt)};
        const Poly cu = Tt.normal_form(img_u_Y.evaluate_into(tt, exact_images));
        const Poly ce = Tt.normal_form(img_e_Y.evaluate_into(tt, exact_images));
        rep.image_u = to_string(cu);
        rep.image_e = to_string(ce);
        const Poly want_u = Poly::variable(tt, "U");
        const Poly want_e = Poly::variable(tt, "U") * Poly::variable(tt, "E");
        if (!(cu == want_u)) {
            comp.ok = false;
            comp.witnesses.push_back("u -> " + rep.image_u);
        }
        if (!(ce == want_e)) {
            comp.ok = false;
            comp.witnesses.push_back("e -> " + rep.image_e);
        }
    } else {
        comp.witnesses.push_back("image in Y still involves t: " + to_string(img_e_Y));
    }
    rep.steps.push_back(std::move(comp));

    for (const auto& s : rep.steps)
        if (!s.ok) rep.status = CheckStatus::fail;
    return rep;
}

}  // namespace hitch

#endif  // HITCHKIT_BLOWUP_HPP
