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
 * Verification suites: ring, matrix, geometry and numerology.
 *
 * Every check yields a CheckResult. `flagged` is reserved for two known
 * normalization discrepancies (the trace of Φ^2, and the d′-dependence of the
 * Prym-sequence count); it never counts as a failure.
 */

#ifndef HITCHKIT_CHECKS_HPP
#define HITCHKIT_CHECKS_HPP

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hitchkit/blowup.hpp"
#include "hitchkit/isogeny.hpp"
#include "hitchkit/numerology.hpp"
#include "hitchkit/poly_matrix.hpp"
#include "hitchkit/quotient_ring.hpp"
#include "hitchkit/spectral.hpp"

namespace hitch {

using Witnesses = std::vector<std::pair<std::string, std::string>>;

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::pass;
    Witnesses witnesses;
    std::string anchor;  // the statement being checked

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct SuiteConfig {
    int genus = 2;
    unsigned trunc = 8;
    unsigned long long seed = 1;
};

inline bool has_failures(const std::vector<CheckResult>& rs) {
    return std::any_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.status == CheckStatus::fail; });
}

namespace detail {

class CheckList {
public:
    /// Runs `body`; an escaping exception turns into a failure with the message as witness.
    void run(const std::string& id, const std::string& anchor, const std::function<void(CheckResult&)>& body) {
        CheckResult r{id, CheckStatus::pass, {}, anchor};
        try {
            body(r);
        } catch (const std::exception& e) {
            r.status = CheckStatus::fail;
            r.witnesses.emplace_back("error", e.what());
        }
        if ((r.status == CheckStatus::fail || r.status == CheckStatus::flagged) && r.witnesses.empty())
            r.witnesses.emplace_back("note", "no witness recorded");
        results_.push_back(std::move(r));
    }
    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::vector<CheckResult> results_;
};

inline void expect(CheckResult& r, bool ok, const std::string& what, const std::string& got) {
    if (!ok) {
        r.status = CheckStatus::fail;
        r.witnesses.emplace_back(what, got);
    }
}

inline void expect_poly(CheckResult& r, const std::string& what, const Poly& got, const Poly& want) {
    r.witnesses.emplace_back(what, to_string(got));
    if (!(got == want)) {
        r.status = CheckStatus::fail;
        r.witnesses.emplace_back(what + ".expected", to_string(want));
    }
}

}  // namespace detail

/// Random univariate polynomial in `var` with integer coefficients in [-5, 5].
inline Poly random_univariate(std::mt19937_64& rng, const Context& ctx, std::string_view var, unsigned max_deg,
                              bool vanish_at_zero = false) {
    std::uniform_int_distribution<long> coef(-5, 5);
    std::uniform_int_distribution<unsigned> deg(1, max_deg);
    const unsigned d = deg(rng);
    const Poly x = Poly::variable(ctx, var);
    Poly p(ctx);
    for (unsigned k = vanish_at_zero ? 1 : 0; k <= d; ++k) p += x.pow(k) * Rational(coef(rng));
    if (p.degree_in(ctx.require(var)) == 0 || (vanish_at_zero && p.is_zero())) p += x.pow(d);
    return p;
}

inline std::vector<CheckResult> ring_suite(const SuiteConfig& cfg) {
    detail::CheckList out;
    std::mt19937_64 rng(cfg.seed);
    const RelationSet sym = RelationSet::parse({"u", "v"}, {"q1", "q2"}, {"u^2 - q1", "v^2 - q2"});
    const Poly uv = sym.poly("u + v");

    out.run("ring.normal_form.power2", "(u+v)^2 = 2uv + q1 + q2 mod (u^2 - q1, v^2 - q2)", [&](CheckResult& r) {
        detail::expect_poly(r, "nf", sym.normal_form(uv.pow(2)), sym.poly("2*u*v + q1 + q2"));
    });
    out.run("ring.normal_form.power3", "(u+v)^3 = u(q1 + 3q2) + v(q2 + 3q1)", [&](CheckResult& r) {
        detail::expect_poly(r, "nf", sym.normal_form(uv.pow(3)), sym.poly("u*(q1 + 3*q2) + v*(q2 + 3*q1)"));
    });
    out.run("ring.normal_form.power4", "(u+v)^4 = 4(q1+q2)uv + q1^2 + q2^2 + 6q1q2", [&](CheckResult& r) {
        detail::expect_poly(r, "nf", sym.normal_form(uv.pow(4)),
                            sym.poly("4*(q1 + q2)*u*v + q1^2 + q2^2 + 6*q1*q2"));
    });
    out.run("ring.plus.well_defined", "u -> u+v kills u^4 - 2(q1+q2)u^2 + (q1-q2)^2", [&](CheckResult& r) {
        RelationSet src = RelationSet::parse({"u"}, {"q1", "q2"}, {"u^4 - 2*(q1 + q2)*u^2 + (q1 - q2)^2"});
        RingMorphism plus(src, sym, {{"u", uv}});
        auto wd = check_well_defined(plus);
        detail::expect(r, wd.ok, "residue", wd.ok ? "" : to_string(wd.witnesses.front().second));
        r.witnesses.emplace_back("image_u2", to_string(plus.apply_raw(src.poly("u^2"))));
    });
    out.run("ring.well_defined.detects_failure", "u -> u from R[u]/(u^2) to R[u]/(u^2 - t) is not well defined",
            [&](CheckResult& r) {
                RingMorphism m = RingMorphism::parse(RelationSet::parse({"u"}, {"t"}, {"u^2"}),
                                                     RelationSet::parse({"u"}, {"t"}, {"u^2 - t"}), {{"u", "u"}});
                auto wd = check_well_defined(m);
                detail::expect(r, !wd.ok, "ok", "true");
                if (!wd.ok) detail::expect_poly(r, "residue", wd.witnesses.front().second, m.target().poly("t"));
            });
    out.run("ring.kernel.generic", "plus co-map is injective when q̄1 = t, q̄2 = t + 1", [&](CheckResult& r) {
        const Context& t = chart_context();
        auto m = plus_comorphism(parse_poly("t", t), parse_poly("t + 1", t));
        auto k = kernel_conditions(m, default_degree_bound(parse_poly("t", t), parse_poly("t + 1", t)));
        detail::expect(r, k.generators.empty() && k.status == KernelStatus::solved, "kernel",
                       std::to_string(k.generators.size()) + " generators, " + to_string(k.status));
        r.witnesses.emplace_back("conditions", std::to_string(k.conditions.size()));
    });
    out.run("ring.kernel.random_pairs", "plus co-map is injective for 5 random pairs q̄1 != q̄2 of degree <= 6",
            [&](CheckResult& r) {
                const Context& t = chart_context();
                for (int i = 0; i < 5; ++i) {
                    Poly a = random_univariate(rng, t, "t", 6), b = random_univariate(rng, t, "t", 6);
                    while (a == b) b = random_univariate(rng, t, "t", 6);
                    auto k = kernel_conditions(plus_comorphism(a, b), default_degree_bound(a, b));
                    r.witnesses.emplace_back("pair" + std::to_string(i), to_string(a) + " ; " + to_string(b));
                    detail::expect(r, k.generators.empty() && k.status == KernelStatus::solved,
                                   "kernel" + std::to_string(i), std::to_string(k.generators.size()));
                }
            });
    for (const char* qtext : {"t", "t + t^2", "2*t - t^3"}) {
        out.run(std::string("ring.kernel.diagonal[") + qtext + "]", "ker(plus) = (u(u^2 - 4q̄)) when q̄1 = q̄2 = q̄",
                [&](CheckResult& r) {
                    const Poly q = parse_poly(qtext, chart_context());
                    auto m = plus_comorphism(q, q);
                    auto k = kernel_conditions(m, default_degree_bound(q, q));
                    detail::expect(r, k.generators.size() == 1 && k.status == KernelStatus::solved, "kernel",
                                   std::to_string(k.generators.size()) + " generators");
                    if (k.generators.size() != 1) return;
                    const Poly want = m.source().poly("u^3") - q.embed(m.source().context()) *
                                                                   m.source().poly("u") * Rational(4);
                    detail::expect_poly(r, "generator", k.generators.front().value(), want);
                    detail::expect(r, m.apply(k.generators.front()).is_zero(), "image", "nonzero");
                    RelationSet co = coimage(m, k);
                    detail::expect_poly(r, "coimage", co.relations().front(), want);
                });
    }
    out.run("ring.kernel.nilpotent", "ker(plus) = (u^3) when q̄1 = q̄2 = 0", [&](CheckResult& r) {
        const Poly z(chart_context());
        auto m = plus_comorphism(z, z);
        auto k = kernel_conditions(m, 2);
        detail::expect(r, k.generators.size() == 1, "kernel", std::to_string(k.generators.size()) + " generators");
        if (k.generators.size() == 1) detail::expect_poly(r, "generator", k.generators.front().value(), m.source().poly("u^3"));
    });
    out.run("ring.coimage.ribbon", "R[u]/((u^2-t)^2) -> R[u,v]/(u^2, v^2-t), u -> u+v is injective",
            [&](CheckResult& r) {
                const Context& t = chart_context();
                auto m = plus_comorphism(Poly(t), parse_poly("t", t));
                auto k = kernel_conditions(m, 3);
                detail::expect(r, k.generators.empty(), "kernel", std::to_string(k.generators.size()));
                detail::expect(r, coimage(m, k) == m.source(), "coimage", "differs from source");
                r.witnesses.emplace_back("source", m.source().describe());
            });
    for (const char* qtext : {"t", "t*(1 + t)", "t - t^3"}) {
        out.run(std::string("ring.blowup[") + qtext + "]",
                "alpha, beta well defined and invertible mod order N; composite u -> U, e -> U*E",
                [&](CheckResult& r) {
                    auto rep = verify_blowup_local(parse_poly(qtext, chart_context()), cfg.trunc);
                    r.status = rep.status;
                    r.witnesses.emplace_back("order", std::to_string(rep.order));
                    r.witnesses.emplace_back("tau", rep.tau);
                    r.witnesses.emplace_back("u", rep.image_u);
                    r.witnesses.emplace_back("e", rep.image_e);
                    for (const auto& s : rep.steps)
                        if (!s.ok)
                            for (const auto& w : s.witnesses) r.witnesses.emplace_back(s.name, w);
                });
    }
    out.run("ring.blowup.double_zero", "q̄ = t^2 violates the simple-zero precondition", [&](CheckResult& r) {
        try {
            verify_blowup_local(parse_poly("t^2", chart_context()), cfg.trunc);
            detail::expect(r, false, "precondition", "accepted");
        } catch (const PreconditionError& e) {
            r.witnesses.emplace_back("error", e.what());
        }
    });
    const RelationSet diag = RelationSet::parse({"u", "v"}, {"t"}, {"u^2 - t", "v^2 - t"});
    out.run("ring.involution.swap", "u <-> v: invariants {1, u+v, uv}, anti-invariants {u-v}", [&](CheckResult& r) {
        RingInvolution s3(RingMorphism::parse(diag, diag, {{"u", "v"}, {"v", "u"}}));
        auto split = involution_decompose(s3);
        std::vector<Poly> inv, anti;
        for (const auto& e : split.invariant) inv.push_back(e.value());
        for (const auto& e : split.anti_invariant) anti.push_back(e.value());
        const std::vector<Poly> want_inv{diag.poly("1"), diag.poly("u + v"), diag.poly("u*v")};
        const std::vector<Poly> want_anti{diag.poly("u - v")};
        std::string got;
        for (const auto& p : inv) got += to_string(p) + "; ";
        r.witnesses.emplace_back("invariant", got);
        detail::expect(r, inv == want_inv, "invariant.expected", "1; u + v; u*v");
        detail::expect(r, anti == want_anti, "anti_invariant", anti.empty() ? "" : to_string(anti.front()));
    });
    out.run("ring.involution.sigma1", "u -> -u: invariants {1, v}, anti-invariants {u, uv}", [&](CheckResult& r) {
        RingInvolution s1(RingMorphism::parse(diag, diag, {{"u", "-u"}, {"v", "v"}}));
        auto split = involution_decompose(s1);
        std::vector<Poly> inv, anti;
        for (const auto& e : split.invariant) inv.push_back(e.value());
        for (const auto& e : split.anti_invariant) anti.push_back(e.value());
        detail::expect(r, inv == std::vector<Poly>{diag.poly("1"), diag.poly("v")}, "invariant",
                       std::to_string(inv.size()));
        detail::expect(r, anti == std::vector<Poly>{diag.poly("u"), diag.poly("u*v")}, "anti_invariant",
                       std::to_string(anti.size()));
    });
    out.run("ring.diagonal_ideals", "R[u,v]/(u^2-q̄, v^2-q̄, u-v) = R[w]/(w^2-q̄), likewise for u+v", [&](CheckResult& r) {
        auto d = diagonal_ideals(diag);
        r.witnesses.emplace_back("plus", d.plus.quotient.describe());
        r.witnesses.emplace_back("minus", d.minus.quotient.describe());
        const RelationSet want = RelationSet::parse({"w"}, {"t"}, {"w^2 - t"});
        detail::expect(r, d.plus.quotient == want && d.minus.quotient == want, "quotient", "not R[w]/(w^2 - t)");
    });
    out.run("ring.morphism.multiplicative", "plus(pq) = plus(p) plus(q) on 20 random pairs", [&](CheckResult& r) {
        const Context& t = chart_context();
        auto m = plus_comorphism(parse_poly("t + 2*t^2", t), parse_poly("1 - t", t));
        std::uniform_int_distribution<long> coef(-4, 4);
        auto random_elem = [&] {
            Poly p(m.source().context());
            for (const auto& b : m.source().basis())
                p += m.source().basis_element(b) * Rational(coef(rng)) *
                     (Poly::variable(m.source().context(), "t") + Poly::constant(m.source().context(), Rational(coef(rng))));
            return p;
        };
        for (int i = 0; i < 20; ++i) {
            Poly p = random_elem(), q = random_elem();
            Poly lhs = m.apply_raw(p * q);
            Poly rhs = m.target().normal_form(m.apply_raw(p) * m.apply_raw(q));
            if (!(lhs == rhs)) {
                detail::expect(r, false, "case" + std::to_string(i), to_string(p) + " ; " + to_string(q));
                return;
            }
        }
    });
    return out.take();
}

inline std::vector<CheckResult> matrix_suite(const SuiteConfig& cfg) {
    detail::CheckList out;
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    const Context abc{"a", "b", "c"};
    const PolyMatrix phi = PolyMatrix::parse(abc, {{"a", "b"}, {"c", "-a"}});
    const Poly q = parse_poly("a^2 + b*c", abc);
    const PolyMatrix big = tensor_higgs(phi, -phi);

    out.run("matrix.frame.congruence", "P^t Q1 P = Q2 for Q1 = ω⊗ω", [&](CheckResult& r) {
        FrameForms f = frame_quadforms(abc);
        r.witnesses.emplace_back("Q1", f.q1.to_string());
        r.witnesses.emplace_back("Q2", f.q2.to_string());
        r.witnesses.emplace_back("P", f.p.to_string());
        const PolyMatrix q1_want =
            PolyMatrix::from_rationals(abc, {{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}});
        const PolyMatrix q2_want =
            PolyMatrix::from_rationals(abc, {{2, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -2, 0}, {0, 1, 0, 0}});
        detail::expect(r, f.q1 == q1_want, "Q1.expected", q1_want.to_string());
        detail::expect(r, f.q2 == q2_want, "Q2.expected", q2_want.to_string());
        detail::expect(r, (f.p.transpose() * f.q1 * f.p - f.q2).is_zero(), "congruence", "nonzero");
    });
    out.run("matrix.so13.beta", "P^-1 (φ⊗I - I⊗φ) P = [[0, β], [-β^T, 0]] with β = [-c, 2a, b]", [&](CheckResult& r) {
        auto red = so13_reduce(phi);
        r.witnesses.emplace_back("beta", red.beta.to_string());
        r.witnesses.emplace_back("beta_T", red.beta_t.to_string());
        detail::expect(r, red.matches_expected, "beta.expected", "[[-c, 2*a, b]]");
        const PolyMatrix bt_want = PolyMatrix::parse(abc, {{"2*b"}, {"-2*a"}, {"-2*c"}});
        detail::expect(r, red.beta_t == bt_want, "beta_T.expected", bt_want.to_string());
    });
    out.run("matrix.so13.numeric", "φ = diag(1, -1) gives β = [0, 2, 0]", [&](CheckResult& r) {
        auto red = so13_reduce(PolyMatrix::from_rationals(abc, {{1, 0}, {0, -1}}));
        r.witnesses.emplace_back("beta", red.beta.to_string());
        detail::expect(r, red.beta == PolyMatrix::from_rationals(abc, {{0, 2, 0}}), "beta.expected", "[[0, 2, 0]]");
    });
    out.run("matrix.reduced_ch", "Φ^3 = 4qΦ for Φ = φ⊗I - I⊗φ, q = a^2 + bc", [&](CheckResult& r) {
        auto rc = verify_reduced_ch(big);
        detail::expect(r, rc.identity_holds && rc.c, "identity", "no scalar c");
        if (rc.c) detail::expect_poly(r, "c", *rc.c, q * Rational(4));
    });
    out.run("matrix.trace_normalization", "Tr(Φ^2) against the 4q normalization", [&](CheckResult& r) {
        auto rc = verify_reduced_ch(big);
        r.witnesses.emplace_back("tr_phi2", to_string(rc.tr2));
        r.witnesses.emplace_back("alt_normalization", to_string(q * Rational(4)));
        if (rc.tr2 == q * Rational(8)) {
            r.status = CheckStatus::flagged;
            r.witnesses.emplace_back("note", "Tr(Φ^2) = 8q = 2c; the 4q normalization is off by a factor 2");
        } else if (!(rc.tr2 == q * Rational(4))) {
            r.status = CheckStatus::fail;
        }
    });
    out.run("matrix.charpoly.sl2", "det(η - φ) = η^2 - (a^2 + bc)", [&](CheckResult& r) {
        CharPoly ch = char_poly(phi);
        r.witnesses.emplace_back("char", ch.to_string());
        detail::expect_poly(r, "c0", ch.coefficient(0), -q);
        detail::expect(r, ch.coefficient(1).is_zero(), "c1", to_string(ch.coefficient(1)));
    });
    out.run("matrix.charpoly.so13", "det(η - (φ⊗I - I⊗φ)) = η^2 (η^2 - 4q)", [&](CheckResult& r) {
        CharPoly ch = char_poly(big);
        const Poly eta_form = ch.as_poly();
        const Context& ctx = eta_form.context();
        const Poly want = parse_poly("η^2*(η^2 - 4*(a^2 + b*c))", ctx);
        detail::expect_poly(r, "char", eta_form, want);
    });
    const Context two{"a1", "b1", "c1", "a2", "b2", "c2"};
    const PolyMatrix p1 = PolyMatrix::parse(two, {{"a1", "b1"}, {"c1", "-a1"}});
    const PolyMatrix p2 = PolyMatrix::parse(two, {{"a2", "b2"}, {"c2", "-a2"}});
    const PolyMatrix t12 = tensor_higgs(p1, p2);
    const Poly q1 = quadratic_differential(p1), q2 = quadratic_differential(p2);
    out.run("matrix.charpoly.tensor", "det(η - (φ1⊗I + I⊗φ2)) = η^4 - 2(q1+q2)η^2 + (q1-q2)^2", [&](CheckResult& r) {
        CharPoly ch = char_poly(t12);
        detail::expect_poly(r, "c2", ch.coefficient(2), (q1 + q2) * Rational(-2));
        detail::expect_poly(r, "c0", ch.coefficient(0), (q1 - q2) * (q1 - q2));
        detail::expect(r, ch.coefficient(1).is_zero() && ch.coefficient(3).is_zero(), "odd", "nonzero");
    });
    const Context bg{"β", "γ"};
    out.run("matrix.charpoly.sostar4", "det(η - I⊗[[0,β],[γ,0]]) = (η^2 - βγ)^2", [&](CheckResult& r) {
        PolyMatrix f = kron(PolyMatrix::identity(bg, 2), PolyMatrix::parse(bg, {{"0", "β"}, {"γ", "0"}}));
        CharPoly ch = char_poly(f);
        const Poly eta_form = ch.as_poly();
        detail::expect_poly(r, "char", eta_form, parse_poly("(η^2 - β*γ)^2", eta_form.context()));
    });
    out.run("matrix.sostar4.skew_block", "[[0, βω], [γω, 0]] is skew for [[0,I],[I,0]] with char (η^2 + βγ)^2",
            [&](CheckResult& r) {
                PolyMatrix f(bg, 4, 4);
                const PolyMatrix w = omega(bg);
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < 2; ++j) {
                        f(i, 2 + j) = Poly::variable(bg, "β") * w(i, j);
                        f(2 + i, j) = Poly::variable(bg, "γ") * w(i, j);
                    }
                QuadForm qf(PolyMatrix::from_rationals(bg, {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}),
                            FormKind::symmetric);
                detail::expect(r, is_q_skew(f, qf), "skew", "false");
                const Poly eta_form = char_poly(f).as_poly();
                detail::expect_poly(r, "char", eta_form, parse_poly("(η^2 + β*γ)^2", eta_form.context()));
                detail::expect_poly(r, "pf^2", pfaffian(f, qf).pow(2), det_cofactor(f));
            });
    out.run("matrix.a2_trace", "η^2 coefficient = -Tr(Φ^2)/2 for traceless 4x4 Φ", [&](CheckResult& r) {
        detail::expect_poly(r, "a2", char_poly(t12).coefficient(2), (t12 * t12).trace() * Rational(-1, 2));
    });
    const QuadForm ww(frame_quadforms(two).q1, FormKind::symmetric);
    out.run("matrix.qskew.tensor", "φ1⊗I + I⊗φ2 is skew for ω⊗ω", [&](CheckResult& r) {
        detail::expect(r, is_q_skew(t12, ww), "skew", "false");
        detail::expect(r, !is_q_skew(PolyMatrix::identity(two, 4), ww), "identity_skew", "true");
    });
    out.run("matrix.pfaffian.tensor", "Pf(φ1⊗I + I⊗φ2) = ±(q1 - q2), squaring to the η^0 coefficient",
            [&](CheckResult& r) {
                Poly pf = pfaffian(t12, ww);
                r.witnesses.emplace_back("pf", to_string(pf));
                detail::expect(r, pf == q1 - q2 || pf == q2 - q1, "pf.expected", "±(q1 - q2)");
                detail::expect_poly(r, "pf^2", pf * pf, char_poly(t12).coefficient(0));
            });
    out.run("matrix.pfaffian.random", "Pf^2 = det on 20 random skew matrices for ω⊗ω, Q2 and [[0,I],[I,0]]",
            [&](CheckResult& r) {
                const Context none;
                std::vector<PolyMatrix> forms{frame_quadforms(none).q1, frame_quadforms(none).q2,
                                              PolyMatrix::from_rationals(none, {{0, 0, 1, 0}, {0, 0, 0, 1},
                                                                                {1, 0, 0, 0}, {0, 1, 0, 0}})};
                std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
                for (int i = 0; i < 20; ++i) {
                    const PolyMatrix& qm = forms[static_cast<std::size_t>(i) % forms.size()];
                    PolyMatrix a(none, 4, 4);
                    for (std::size_t x = 0; x < 4; ++x)
                        for (std::size_t y = x + 1; y < 4; ++y) {
                            a(x, y) = Poly::constant(none, Rational(num(rng), den(rng)));
                            a(y, x) = -a(x, y);
                        }
                    PolyMatrix f = *qm.constant_inverse() * a;
                    QuadForm qf(qm, FormKind::symmetric);
                    Poly pf = pfaffian(f, qf);
                    if (!(pf * pf == det_cofactor(f))) {
                        detail::expect(r, false, "case" + std::to_string(i), f.to_string());
                        return;
                    }
                }
                r.witnesses.emplace_back("cases", "20");
            });
    out.run("matrix.hitchin.so13", "hitchin point of φ⊗I - I⊗φ is (-4q, 0)", [&](CheckResult& r) {
        auto hp = hitchin_point_so4(big, QuadForm(frame_quadforms(abc).q1, FormKind::symmetric));
        detail::expect_poly(r, "a2", hp.first, q * Rational(-4));
        detail::expect_poly(r, "pf", hp.second, Poly(abc));
    });
    out.run("matrix.base_map", "(q1, q2) -> (-2(q1 + q2), q1 - q2)", [&](CheckResult& r) {
        const Context qc{"q"};
        const Poly qq = Poly::variable(qc, "q"), zero(qc);
        auto d = base_isogeny_map(qq, qq);
        detail::expect_poly(r, "diag.a2", d.first, qq * Rational(-4));
        detail::expect_poly(r, "diag.pf", d.second, zero);
        auto s = base_isogeny_map(zero, qq);
        detail::expect_poly(r, "ribbon.a2", s.first, qq * Rational(-2));
        detail::expect_poly(r, "ribbon.pf", s.second, -qq);
        auto hp = hitchin_point_so4(t12, ww);
        auto bm = base_isogeny_map(q1, q2);
        detail::expect_poly(r, "tensor.a2", hp.first, bm.first);
        detail::expect(r, hp.second == bm.second || hp.second == -bm.second, "tensor.pf", to_string(hp.second));
    });
    return out.take();
}

/// A differential with 4g-4 simple zeros labelled prefix1, prefix2, ...
inline QuadDiff simple_differential(const CurveContext& c, const std::string& prefix,
                                    const std::vector<std::string>& charts = {}) {
    std::vector<ZeroPoint> zeros;
    std::map<std::string, Poly> ch;
    for (int i = 1; i <= 4 * c.genus - 4; ++i) {
        const std::string label = prefix + std::to_string(i);
        zeros.push_back({label, 1});
        const std::size_t k = static_cast<std::size_t>(i - 1);
        if (k < charts.size()) ch.emplace(label, parse_poly(charts[k], chart_context()));
    }
    return QuadDiff(c, zeros, ch);
}

inline std::vector<CheckResult> geometry_suite(const SuiteConfig& cfg) {
    detail::CheckList out;
    std::mt19937_64 rng(cfg.seed ^ 0xc2b2ae3d27d4eb4fULL);
    const CurveContext curve(cfg.genus);
    const int g = cfg.genus;
    const QuadDiff q = simple_differential(curve, "p", {"t", "t*(1 + t)", "t - t^3"});
    const QuadDiff q_other = simple_differential(curve, "r");
    const QuadDiff zero = QuadDiff::zero(curve);

    out.run("geometry.classify.smooth", "η^2 = q with simple zeros is smooth of genus 4g-3", [&](CheckResult& r) {
        auto c = classify_spectral_curve({curve, q, std::nullopt, std::nullopt});
        r.witnesses.emplace_back("summary", c.summary);
        detail::expect(r, c.smooth && c.normalization_genus == 4 * g - 3, "genus",
                       std::to_string(c.normalization_genus.value_or(-1)));
    });
    out.run("geometry.classify.ribbon", "q = 0 gives the ribbon 2Σ", [&](CheckResult& r) {
        auto c = classify_spectral_curve({curve, zero, std::nullopt, std::nullopt});
        r.witnesses.emplace_back("summary", c.summary);
        detail::expect(r, !c.reduced && c.components.size() == 1 && c.components[0].name == "Σ" &&
                              c.components[0].multiplicity == 2,
                       "components", c.summary);
    });
    out.run("geometry.classify.diagonal", "the pair (q, q) gives Σ (doubled) and S′ = {η^2 = 4q}", [&](CheckResult& r) {
        auto c = classify_spectral_curve({curve, q, q, std::nullopt});
        r.witnesses.emplace_back("summary", c.summary);
        detail::expect(r, c.regime == "diagonal" && c.components.size() == 2 && c.components[0].name == "Σ" &&
                              c.components[1].name == "S′",
                       "components", c.regime);
    });
    out.run("geometry.classify.generic", "a generic pair gives a reduced S12 with 4g-4 nodes", [&](CheckResult& r) {
        auto c = classify_spectral_curve({curve, q, q_other, std::nullopt});
        r.witnesses.emplace_back("summary", c.summary);
        detail::expect(r, c.regime == "generic" && c.reduced && c.singular.size() == 1 &&
                              c.singular[0].count == static_cast<unsigned>(4 * g - 4),
                       "nodes", c.regime);
        detail::expect(r, c.normalization_genus == 12 * g - 11, "normalization_genus",
                       std::to_string(c.normalization_genus.value_or(-1)));
        detail::expect(r, c.arithmetic_genus == 16 * g - 15, "arithmetic_genus",
                       std::to_string(c.arithmetic_genus.value_or(-1)));
    });
    out.run("geometry.classify.rescaling", "classification is unchanged when q is scaled by 4", [&](CheckResult& r) {
        std::map<std::string, Poly> scaled;
        for (const auto& [label, p] : q.charts()) scaled.emplace(label, p * Rational(4));
        QuadDiff q4(curve, q.zeros(), scaled);
        auto a = classify_spectral_curve({curve, q, q_other, std::nullopt});
        auto b = classify_spectral_curve({curve, q4, q_other, std::nullopt});
        detail::expect(r, a.regime == b.regime && a.summary == b.summary, "summary", b.summary);
    });
    out.run("geometry.fiber_product.smooth", "disjoint simple zeros give a smooth fourfold cover", [&](CheckResult& r) {
        auto fp = fiber_product(q, q_other);
        r.witnesses.emplace_back("summary", fp.summary);
        detail::expect(r, fp.kind == "smooth", "kind", fp.kind);
    });
    out.run("geometry.fiber_product.split_ribbon", "2Σ x_Σ S is a split ribbon: (u)^2 = 0, (u) free of rank 1",
            [&](CheckResult& r) {
                auto fp = fiber_product(zero, q);
                detail::expect(r, fp.kind == "split_ribbon", "kind", fp.kind);
                for (const auto& ch : fp.charts) {
                    auto s = split_ribbon_check(ch.ring);
                    detail::expect(r, s.ideal_squares_to_zero && s.ideal_free_rank_one, ch.label, ch.ring.describe());
                }
            });
    out.run("geometry.fiber_product.diagonal", "S x_Σ S has components Δ+ and Δ-", [&](CheckResult& r) {
        auto fp = fiber_product(q, q);
        detail::expect(r, fp.kind == "diagonal" && fp.components.size() == 2, "kind", fp.kind);
    });
    out.run("geometry.plus.generic", "generic pair: plus co-map injective with smooth source on every chart",
            [&](CheckResult& r) {
                auto pi = plus_image(q, q_other, cfg.trunc);
                r.witnesses.emplace_back("summary", pi.summary);
                r.witnesses.emplace_back("charts", std::to_string(pi.charts.size()));
                detail::expect(r, pi.image == "S12" && pi.normalization_certified, "certified", pi.summary);
            });
    out.run("geometry.plus.diagonal", "(S, S): kernel u(u^2 - 4q̄) at every chart, image Σ ∪ S′", [&](CheckResult& r) {
        auto pi = plus_image(q, q, cfg.trunc);
        detail::expect(r, pi.image == "Σ ∪ S′", "image", pi.image);
        for (const auto& pc : pi.charts) {
            detail::expect(r, pc.kernel.generators.size() == 1, pc.label, "kernel rank");
            if (pc.coimage) r.witnesses.emplace_back(pc.label, *pc.coimage);
        }
    });
    out.run("geometry.plus.ribbon", "(2Σ, S): image 2S, plus is the blow-up at each ramification point",
            [&](CheckResult& r) {
                auto pi = plus_image(zero, q, cfg.trunc);
                r.witnesses.emplace_back("summary", pi.summary);
                detail::expect(r, pi.image == "2S" && pi.normalization_certified, "certified", pi.summary);
            });
    out.run("geometry.direct_image.smooth", "θ = u on R[u]/(u^2 - t): Φ = [[0, t], [1, 0]], char η^2 - t",
            [&](CheckResult& r) {
                RelationSet s = RelationSet::parse({"u"}, {"t"}, {"u^2 - t"});
                auto di = direct_image_higgs(free_module(s), s.poly("u"));
                r.witnesses.emplace_back("phi", di.phi.to_string());
                detail::expect(r, di.phi == PolyMatrix::parse(chart_context(), {{"0", "t"}, {"1", "0"}}), "phi.expected",
                               "[[0, t], [1, 0]]");
                const Poly cp = di.charpoly.as_poly();
                detail::expect_poly(r, "char", cp, parse_poly("η^2 - t", cp.context()));
            });
    out.run("geometry.direct_image.product", "θ = u+v on R[u,v]/(u^2-q1, v^2-q2): η^4 - 2(q1+q2)η^2 + (q1-q2)^2",
            [&](CheckResult& r) {
                RelationSet s = RelationSet::parse({"u", "v"}, {"q1", "q2"}, {"u^2 - q1", "v^2 - q2"});
                auto di = direct_image_higgs(free_module(s), s.poly("u + v"));
                const Poly cp = di.charpoly.as_poly();
                detail::expect_poly(r, "char", cp, parse_poly("η^4 - 2*(q1 + q2)*η^2 + (q1 - q2)^2", cp.context()));
            });
    out.run("geometry.direct_image.ribbon", "θ = u+v on R[u,v]/(u^2, v^2 - q): (η^2 - q)^2", [&](CheckResult& r) {
        RelationSet s = RelationSet::parse({"u", "v"}, {"q"}, {"u^2", "v^2 - q"});
        auto di = direct_image_higgs(free_module(s), s.poly("u + v"));
        const Poly cp = di.charpoly.as_poly();
        detail::expect_poly(r, "char", cp, parse_poly("(η^2 - q)^2", cp.context()));
    });
    out.run("geometry.direct_image.random", "θ = u on R[u]/(f) has char f(η) for 10 random monic f, deg f <= 4",
            [&](CheckResult& r) {
                const Context ctx{"u", "t"};
                std::uniform_int_distribution<unsigned> deg(1, 4);
                for (int i = 0; i < 10; ++i) {
                    const unsigned d = deg(rng);
                    Poly f = Poly::variable(ctx, "u").pow(d);
                    for (unsigned k = 0; k < d; ++k)
                        f += Poly::variable(ctx, "u").pow(k) * random_univariate(rng, ctx, "t", 2);
                    RelationSet s({"u"}, {"t"}, {f});
                    auto di = direct_image_higgs(free_module(s), s.poly("u"));
                    const Poly cp = di.charpoly.as_poly();
                    const Poly want = f.evaluate_into(cp.context(), {Poly::variable(cp.context(), "η"),
                                                                     Poly::variable(cp.context(), "t")});
                    if (!(cp == want)) {
                        detail::expect(r, false, "f" + std::to_string(i), to_string(f));
                        return;
                    }
                }
            });
    out.run("geometry.box_product.free", "free ⊠ free over (u^2-q̄1, v^2-q̄2) has rank 4 over R", [&](CheckResult& r) {
        auto m = box_product(free_module(RelationSet::parse({"u"}, {"t"}, {"u^2 - t"})),
                             free_module(RelationSet::parse({"v"}, {"t"}, {"v^2 - t - 1"})));
        detail::expect(r, m.rank() == 4, "rank", std::to_string(m.rank()));
        auto fm = free_module(m.ring());
        detail::expect(r, fm.actions() == m.actions(), "actions", "differ from the free module on the product");
    });
    out.run("geometry.box_product.torsion", "(u = 0 on rank 2) ⊠ L gives rank 2 over the S chart, u acting by 0",
            [&](CheckResult& r) {
                RelationSet sigma2 = RelationSet::parse({"u"}, {"t"}, {"u^2"});
                LocalModule e(sigma2, {PolyMatrix(sigma2.base_context(), 2, 2)});
                RelationSet s = RelationSet::parse({"v"}, {"t"}, {"v^2 - t"});
                auto m = box_product(e, free_module(s));
                detail::expect(r, m.rank() == 4 && m.rank() / s.rank_over_base() == 2, "rank", std::to_string(m.rank()));
                detail::expect(r, m.actions().front().is_zero(), "u_action", m.actions().front().to_string());
            });
    out.run("geometry.box_product.zero", "zero ⊠ M = 0", [&](CheckResult& r) {
        RelationSet s = RelationSet::parse({"u"}, {"t"}, {"u^2 - t"});
        auto m = box_product(zero_module(s), free_module(RelationSet::parse({"v"}, {"t"}, {"v^2 - t"})));
        detail::expect(r, m.rank() == 0, "rank", std::to_string(m.rank()));
    });
    out.run("geometry.diagonal_restriction", "deg on (Δ+, Δ-) is (0, 2 deg L) for deg L = 2(g-1)", [&](CheckResult& r) {
        auto d = diagonal_restriction(2 * (g - 1));
        detail::expect(r, d.first == 0 && d.second == 4 * (g - 1), "degrees",
                       std::to_string(d.first) + ", " + std::to_string(d.second));
    });
    return out.take();
}

inline std::vector<CheckResult> numerology_suite(const SuiteConfig& cfg) {
    detail::CheckList out;
    const long g = cfg.genus;
    out.run("numerology.strata.sl4", "every SL4 stratum has dimension 15(g-1)", [&](CheckResult& r) {
        auto t = strata_table(StrataGroup::sl4, g);
        r.witnesses.emplace_back("rows", std::to_string(t.rows.size()));
        detail::expect(r, t.rows.size() == static_cast<std::size_t>(4 * (g - 1) + 1), "row_count",
                       std::to_string(t.rows.size()));
        for (const auto& row : t.rows)
            detail::expect(r, row.ok, row.tag, std::to_string(row.total) + " != " + std::to_string(row.expected));
    });
    out.run("numerology.strata.so4", "every SO4 stratum has dimension 6(g-1) for every admissible d′",
            [&](CheckResult& r) {
                for (long dp = 0; dp <= 3 * (g - 1); ++dp) {
                    auto t = strata_table(StrataGroup::so4, g, dp);
                    for (const auto& row : t.rows)
                        detail::expect(r, row.ok, row.tag + "@d′=" + std::to_string(dp), std::to_string(row.total));
                }
            });
    out.run("numerology.strata.so4_symbolic", "(g_S - g + d′) + (3(g-1) - d′) is constant in d′", [&](CheckResult& r) {
        auto row = so4_row_symbolic(g);
        detail::expect_poly(r, "total", row.total, Poly::constant(row.total.context(), Rational(6 * (g - 1))));
    });
    out.run("numerology.prym_audit.d0", "h1(K^-1(D′)) + dim Prym = 6(g-1) at d′ = 0", [&](CheckResult& r) {
        auto a = dim_audit_prym_sequence(g, 0);
        r.witnesses.emplace_back("computed", std::to_string(a.computed));
        detail::expect(r, a.ok, "claimed", std::to_string(a.claimed));
    });
    out.run("numerology.prym_audit.dprime", "h1(K^-1(D′)) + dim Prym against 6(g-1) for d′ > 0", [&](CheckResult& r) {
        for (long dp = 1; dp <= 3 * (g - 1); ++dp) {
            auto a = dim_audit_prym_sequence(g, dp);
            r.witnesses.emplace_back("d′=" + std::to_string(dp),
                                     std::to_string(a.computed) + " vs " + std::to_string(a.claimed));
            if (!a.ok) r.status = CheckStatus::flagged;
            if (a.computed != 6 * (g - 1) - dp) r.status = CheckStatus::fail;
        }
    });
    out.run("numerology.counts", "component counts 2g-1, 4g-3 and 2^(2g)", [&](CheckResult& r) {
        detail::expect(r, component_counts(ComponentKind::su2_sl2r, g) == 2 * g - 1, "SU2xSL2R", "");
        detail::expect(r, component_counts(ComponentKind::so_star4, g) == 4 * g - 3, "SO*(4)", "");
        detail::expect(r, component_counts(ComponentKind::prym_of_ribbon, g) == (1L << (2 * g)), "PrymOfRibbon", "");
        detail::expect(r, component_counts(ComponentKind::torsion2, g) == (1L << (2 * g)), "torsion2", "");
    });
    out.run("numerology.spectral_degrees", "g_S = 4g-3, deg L = 2(g-1), deg K_S = 8(g-1), both d̄ formulas agree",
            [&](CheckResult& r) {
                auto s = spectral_degrees(g);
                detail::expect(r, s.g_S == 4 * g - 3, "g_S", std::to_string(s.g_S));
                detail::expect(r, s.deg_L == 2 * (g - 1), "deg_L", std::to_string(s.deg_L));
                detail::expect(r, s.deg_KS == 8 * (g - 1), "deg_KS", std::to_string(s.deg_KS));
                detail::expect(r, s.dbar_formulas_agree, "dbar", "disagree");
            });
    out.run("numerology.riemann_roch", "h0(K) = g, h0(K^2) = 3g-3, h1(d) = h0(2g-2-d)", [&](CheckResult& r) {
        detail::expect(r, riemann_roch(2 * g - 2, g, true).generic_h0 == g, "h0(K)", "");
        detail::expect(r, riemann_roch(4 * g - 4, g).generic_h0 == 3 * g - 3, "h0(K^2)", "");
        for (long d = -3; d <= 4 * g; ++d) {
            if (d == 0 || d == 2 * g - 2) continue;  // O and K are special
            detail::expect(r, riemann_roch(d, g).generic_h1 == riemann_roch(2 * g - 2 - d, g).generic_h0,
                           "serre@" + std::to_string(d), "");
        }
    });
    out.run("numerology.semistability", "degree bounds g-1 (SL2R) and 2g-2 (SO*(4))", [&](CheckResult& r) {
        detail::expect(r, semistability_check(SemistableGroup::sl2r, g, 0, false, false), "deg0", "");
        detail::expect(r, !semistability_check(SemistableGroup::sl2r, g, g, true, true), "over_bound", "");
        detail::expect(r, semistability_check(SemistableGroup::so_star4, g, 2 * g - 2, false, true), "so*4_bound", "");
        detail::expect(r, !semistability_check(SemistableGroup::sl2r, g, 1, true, false), "needs_gamma", "");
    });
    out.run("numerology.isogeny_components", "d -> 2d hits exactly the even SO*(4) labels", [&](CheckResult& r) {
        std::vector<long> image;
        for (long d = -(g - 1); d <= g - 1; ++d) image.push_back(isogeny_component_map(d, g));
        std::vector<long> want;
        for (long e = -(2 * g - 2); e <= 2 * g - 2; e += 2) want.push_back(e);
        detail::expect(r, image == want, "image", std::to_string(image.size()));
    });
    return out.take();
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"ring", "matrix", "geometry", "numerology"};
    return names;
}

/// Runs "all" or one named suite; results are sorted by check id.
inline std::vector<CheckResult> run_suite(const std::string& suite, const SuiteConfig& cfg) {
    std::vector<CheckResult> all;
    auto add = [&](std::vector<CheckResult> rs) { all.insert(all.end(), rs.begin(), rs.end()); };
    if (suite == "all" || suite == "ring") add(ring_suite(cfg));
    if (suite == "all" || suite == "matrix") add(matrix_suite(cfg));
    if (suite == "all" || suite == "geometry") add(geometry_suite(cfg));
    if (suite == "all" || suite == "numerology") add(numerology_suite(cfg));
    if (all.empty() && suite != "all") throw std::invalid_argument("unknown suite '" + suite + "'");
    std::stable_sort(all.begin(), all.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    return all;
}

}  // namespace hitch

#endif  // HITCHKIT_CHECKS_HPP
