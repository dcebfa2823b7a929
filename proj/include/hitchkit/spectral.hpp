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
 * Spectral curves described by divisor data plus local chart models.
 *
 * A quadratic differential q on a curve Σ of genus g is given by its zero
 * divisor (abstract labels with multiplicities summing to 4g-4) and, where
 * needed, a chart polynomial q̄(t) at a zero, re-centered so that q̄(0) = 0.
 * Away from its zeros q is modelled by the unit q̄ = 1; at a zero without a
 * chart the model is t^m.
 */

#ifndef HITCHKIT_SPECTRAL_HPP
#define HITCHKIT_SPECTRAL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hitchkit/blowup.hpp"
#include "hitchkit/poly.hpp"
#include "hitchkit/poly_matrix.hpp"
#include "hitchkit/poly_text.hpp"
#include "hitchkit/quotient_ring.hpp"

namespace hitch {

class MissingChart : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline const Context& chart_context() {
    static const Context ctx{"t"};
    return ctx;
}

struct CurveContext {
    int genus = 2;

    explicit CurveContext(int g) : genus(g) {
        if (g < 2) throw std::invalid_argument("genus must be at least 2");
    }
    int canonical_degree() const { return 2 * genus - 2; }
};

struct ZeroPoint {
    std::string label;
    unsigned multiplicity = 1;
    friend bool operator==(const ZeroPoint&, const ZeroPoint&) = default;
};

class QuadDiff {
public:
    /// The zero differential.
    static QuadDiff zero(const CurveContext& c) { return QuadDiff(c); }

    QuadDiff(const CurveContext& c, std::vector<ZeroPoint> zeros, std::map<std::string, Poly> charts = {})
        : ctx_(c), zero_(false), zeros_(std::move(zeros)) {
        unsigned total = 0;
        std::set<std::string> seen;
        for (const auto& z : zeros_) {
            if (z.multiplicity == 0) throw std::invalid_argument("zero '" + z.label + "' has multiplicity 0");
            if (!seen.insert(z.label).second) throw std::invalid_argument("zero '" + z.label + "' listed twice");
            total += z.multiplicity;
        }
        if (total != static_cast<unsigned>(4 * c.genus - 4))
            throw std::invalid_argument("zero multiplicities sum to " + std::to_string(total) + ", expected 4g-4 = " +
                                        std::to_string(4 * c.genus - 4));
        for (auto& [label, p] : charts) {
            auto it = std::find_if(zeros_.begin(), zeros_.end(), [&](const ZeroPoint& z) { return z.label == label; });
            if (it == zeros_.end()) throw std::invalid_argument("chart given at '" + label + "', which is not a zero");
            Poly q = p.embed(chart_context());
            if (!q.constant_term().is_zero()) throw std::invalid_argument("chart at '" + label + "' does not vanish at 0");
            if (q.is_zero()) throw std::invalid_argument("chart at '" + label + "' is identically zero");
            if (q.order() != it->multiplicity)
                throw std::invalid_argument("chart at '" + label + "' vanishes to order " + std::to_string(q.order()) +
                                            " but the divisor says " + std::to_string(it->multiplicity));
            charts_.emplace(label, std::move(q));
        }
    }

    const CurveContext& curve() const noexcept { return ctx_; }
    bool is_zero() const noexcept { return zero_; }
    const std::vector<ZeroPoint>& zeros() const noexcept { return zeros_; }
    const std::map<std::string, Poly>& charts() const noexcept { return charts_; }

    std::optional<unsigned> multiplicity_at(const std::string& label) const {
        for (const auto& z : zeros_)
            if (z.label == label) return z.multiplicity;
        return std::nullopt;
    }
    bool has_chart(const std::string& label) const { return charts_.count(label) != 0; }
    bool all_simple() const {
        return std::all_of(zeros_.begin(), zeros_.end(), [](const ZeroPoint& z) { return z.multiplicity == 1; });
    }
    unsigned odd_zero_count() const {
        unsigned b = 0;
        for (const auto& z : zeros_) b += z.multiplicity % 2;
        return b;
    }

    /// Local model of q at `label`: 0 for the zero differential, the chart or
    /// t^m at a zero, and the unit 1 elsewhere.
    Poly local_model(const std::string& label) const {
        const Context& t = chart_context();
        if (zero_) return Poly(t);
        if (auto it = charts_.find(label); it != charts_.end()) return it->second;
        if (auto m = multiplicity_at(label)) return Poly::variable(t, "t").pow(*m);
        return Poly::constant(t, Rational(1));
    }

    /// Same divisor and same charts at every zero.
    friend bool operator==(const QuadDiff& a, const QuadDiff& b) {
        if (a.zero_ != b.zero_) return false;
        if (a.zero_) return true;
        auto za = a.zeros_, zb = b.zeros_;
        auto by_label = [](const ZeroPoint& x, const ZeroPoint& y) { return x.label < y.label; };
        std::sort(za.begin(), za.end(), by_label);
        std::sort(zb.begin(), zb.end(), by_label);
        return za == zb && a.charts_ == b.charts_;
    }

private:
    explicit QuadDiff(const CurveContext& c) : ctx_(c), zero_(true) {}

    CurveContext ctx_;
    bool zero_;
    std::vector<ZeroPoint> zeros_;
    std::map<std::string, Poly> charts_;
};

/// Rank 2 (one differential, η^2 - q) or rank 4 (a pair, from the isogeny).
struct SpectralCurveSpec {
    CurveContext curve;
    QuadDiff q1;
    std::optional<QuadDiff> q2;
    std::optional<std::string> expect;  // optional regime assertion

    int rank() const { return q2 ? 4 : 2; }
};

enum class SingularType { node, non_reduced, worse };

inline const char* to_string(SingularType s) {
    switch (s) {
        case SingularType::node: return "node";
        case SingularType::non_reduced: return "non-reduced";
        case SingularType::worse: return "worse";
    }
    return "?";
}

struct Component {
    std::string name;
    unsigned multiplicity = 1;
    std::optional<int> genus;  // geometric genus of the reduced component, when known
};

struct SingularPoint {
    std::string label;
    SingularType type = SingularType::node;
    unsigned count = 1;
    std::string detail;
};

struct CurveClassification {
    std::string regime;
    bool reduced = true;
    bool smooth = true;
    std::vector<Component> components;
    std::vector<SingularPoint> singular;
    std::optional<int> normalization_genus;
    std::optional<int> arithmetic_genus;
    std::string summary;
};

namespace detail {

inline std::optional<Rational> chart_ratio(const QuadDiff& a, const QuadDiff& b) {
    // Equal divisors force q1 = λ q2; λ is read off any chart pair.
    for (const auto& [label, p] : a.charts()) {
        auto it = b.charts().find(label);
        if (it == b.charts().end()) continue;
        if (auto q = exact_divide(p, it->second); q && q->is_constant()) return *q->as_constant();
        throw std::invalid_argument("charts at '" + label + "' are not proportional although the divisors agree");
    }
    return std::nullopt;
}

inline bool same_divisor(const QuadDiff& a, const QuadDiff& b) {
    if (a.is_zero() || b.is_zero() || a.zeros().size() != b.zeros().size()) return false;
    for (const auto& z : a.zeros())
        if (b.multiplicity_at(z.label) != z.multiplicity) return false;
    return true;
}

}  // namespace detail

/// Regime tag of a pair: nilpotent, ribbon, diagonal, proportional or generic.
inline std::string pair_regime(const QuadDiff& a, const QuadDiff& b) {
    if (a.is_zero() && b.is_zero()) return "nilpotent";
    if (a.is_zero() || b.is_zero()) return "ribbon";
    if (a == b) return "diagonal";
    if (detail::same_divisor(a, b)) {
        auto ratio = detail::chart_ratio(a, b);
        if (!ratio) throw MissingChart("equal zero divisors: charts are needed to compare q1 and q2");
        return ratio->is_one() ? "diagonal" : "proportional";
    }
    return "generic";
}

inline CurveClassification classify_rank2(const QuadDiff& q) {
    const int g = q.curve().genus;
    CurveClassification c;
    if (q.is_zero()) {
        c.regime = "ribbon";
        c.reduced = false;
        c.smooth = false;
        c.components.push_back({"Σ", 2, g});
        c.singular.push_back({"Σ", SingularType::non_reduced, 1, "ribbon η^2 = 0"});
        c.arithmetic_genus = 4 * g - 3;
        c.summary = "non-reduced ribbon 2Σ";
        return c;
    }
    c.arithmetic_genus = 4 * g - 3;
    const unsigned b = q.odd_zero_count();
    if (q.all_simple()) {
        c.regime = "smooth";
        c.components.push_back({"S", 1, 4 * g - 3});
        c.normalization_genus = 4 * g - 3;
        c.summary = "smooth double cover S, genus " + std::to_string(4 * g - 3);
        return c;
    }
    c.regime = "singular";
    c.smooth = false;
    for (const auto& z : q.zeros()) {
        if (z.multiplicity == 1) continue;
        SingularType t = z.multiplicity == 2 ? SingularType::node : SingularType::worse;
        c.singular.push_back({z.label, t, 1, "η^2 = t^" + std::to_string(z.multiplicity)});
    }
    c.normalization_genus = 2 * g - 1 + static_cast<int>(b / 2);
    c.components.push_back({"S", 1, c.normalization_genus});
    c.summary = "singular double cover; normalization genus " + std::to_string(*c.normalization_genus) +
                (b == 0 ? " (assuming q is not a square)" : "");
    return c;
}

inline CurveClassification classify_pair(const QuadDiff& q1, const QuadDiff& q2) {
    const int g = q1.curve().genus;
    CurveClassification c;
    c.regime = pair_regime(q1, q2);
    c.arithmetic_genus = 16 * g - 15;
    if (c.regime == "nilpotent") {
        c.reduced = c.smooth = false;
        c.components.push_back({"Σ", 4, g});
        c.singular.push_back({"Σ", SingularType::non_reduced, 1, "η^4 = 0"});
        c.summary = "non-reduced 4Σ";
        return c;
    }
    if (c.regime == "ribbon") {
        const QuadDiff& q = q1.is_zero() ? q2 : q1;
        c.reduced = c.smooth = false;
        c.components.push_back({"S", 2, q.all_simple() ? std::optional<int>(4 * g - 3) : std::nullopt});
        c.singular.push_back({"S", SingularType::non_reduced, 1, "(η^2 - q)^2 = 0"});
        c.summary = "ribbon 2S";
        return c;
    }
    if (c.regime == "diagonal") {
        c.reduced = c.smooth = false;
        c.components.push_back({"Σ", 2, g});
        c.components.push_back({"S′", 1, q1.all_simple() ? std::optional<int>(4 * g - 3) : std::nullopt});
        c.singular.push_back({"Σ", SingularType::non_reduced, 1, "η^2 = 0 factor"});
        for (const auto& z : q1.zeros())
            c.singular.push_back({z.label, SingularType::worse, 1, "Σ meets S′ = {η^2 = 4q}"});
        c.summary = "2Σ ∪ S′ with S′ = {η^2 = 4q}; plus image Σ ∪ S′";
        return c;
    }
    if (c.regime == "proportional") {
        const Rational lambda = *detail::chart_ratio(q1, q2);
        c.smooth = false;
        if (auto r = lambda.sqrt()) {
            c.components.push_back({"S+", 1, q1.all_simple() ? std::optional<int>(4 * g - 3) : std::nullopt});
            c.components.push_back({"S-", 1, q1.all_simple() ? std::optional<int>(4 * g - 3) : std::nullopt});
        } else {
            c.components.push_back({"S12", 1, std::nullopt});
        }
        for (const auto& z : q1.zeros())
            c.singular.push_back({z.label, SingularType::worse, 1, "branches η^2 = (1 ± √λ)^2 q are tangent"});
        c.summary = "q1 = " + lambda.to_string() + "·q2: S12 splits as η^2 = (1 ± √λ)^2 q2";
        return c;
    }
    // generic
    c.smooth = false;
    c.components.push_back({"S12", 1, std::nullopt});
    c.singular.push_back({"q1-q2", SingularType::node, static_cast<unsigned>(4 * g - 4),
                          "one node at η = 0 over each zero of q1 - q2 (generic)"});
    bool clean = q1.all_simple() && q2.all_simple();
    for (const auto& z : q1.zeros())
        if (q2.multiplicity_at(z.label)) {
            clean = false;
            c.singular.push_back({z.label, SingularType::worse, 1, "shared zero: tacnode of S12, node of S1 x S2"});
        }
    for (const auto& z : q1.zeros())
        if (z.multiplicity > 1 && !q2.multiplicity_at(z.label))
            c.singular.push_back({z.label, SingularType::worse, 1, "multiple zero of q1"});
    for (const auto& z : q2.zeros())
        if (z.multiplicity > 1 && !q1.multiplicity_at(z.label))
            c.singular.push_back({z.label, SingularType::worse, 1, "multiple zero of q2"});
    if (clean) {
        c.normalization_genus = 12 * g - 11;
        c.components.front().genus = 12 * g - 11;
    }
    c.summary = "reduced nodal S12 with " + std::to_string(4 * g - 4) + " nodes" +
                (clean ? "; normalization S1 x S2 of genus " + std::to_string(12 * g - 11) : "");
    return c;
}

inline CurveClassification classify_spectral_curve(const SpectralCurveSpec& spec) {
    return spec.q2 ? classify_pair(spec.q1, *spec.q2) : classify_rank2(spec.q1);
}

/// R[u,v]/(u^2 - q̄1, v^2 - q̄2) over R = Q[t].
inline RelationSet product_chart_ring(const Poly& qbar1, const Poly& qbar2) {
    Context ctx{"u", "v", "t"};
    const Poly u = Poly::variable(ctx, "u"), v = Poly::variable(ctx, "v");
    return RelationSet({"u", "v"}, {"t"}, {u * u - qbar1.embed(ctx), v * v - qbar2.embed(ctx)});
}

/// R[u]/(u^4 - 2(q̄1 + q̄2)u^2 + (q̄1 - q̄2)^2), the chart ring of S12.
inline RelationSet composite_chart_ring(const Poly& qbar1, const Poly& qbar2) {
    Context ctx{"u", "t"};
    const Poly u = Poly::variable(ctx, "u");
    const Poly a = qbar1.embed(ctx), b = qbar2.embed(ctx);
    return RelationSet({"u"}, {"t"}, {u.pow(4) - (a + b) * u * u * Rational(2) + (a - b) * (a - b)});
}

/// The plus co-map u -> u + v.
inline RingMorphism plus_comorphism(const Poly& qbar1, const Poly& qbar2) {
    RelationSet target = product_chart_ring(qbar1, qbar2);
    return RingMorphism(composite_chart_ring(qbar1, qbar2), target, {{"u", target.var("u") + target.var("v")}});
}

inline unsigned default_degree_bound(const Poly& qbar1, const Poly& qbar2) {
    return qbar1.total_degree() + qbar2.total_degree() + 2;
}

/// Smoothness of the fiber product chart over t = 0 (Jacobian criterion).
inline bool product_chart_smooth(const Poly& qbar1, const Poly& qbar2) {
    auto vanishes = [](const Poly& q) { return q.constant_term().is_zero(); };
    auto simple = [](const Poly& q) { return !q.derivative(0).constant_term().is_zero(); };
    const Poly a = qbar1.embed(chart_context()), b = qbar2.embed(chart_context());
    if (vanishes(a) && vanishes(b)) return false;
    if (vanishes(a) && !simple(a)) return false;
    if (vanishes(b) && !simple(b)) return false;
    return true;
}

struct ChartRing {
    std::string label;
    Poly qbar1;
    Poly qbar2;
    RelationSet ring;
    bool smooth = false;
};

struct FiberProduct {
    std::string kind;  // smooth, singular, split_ribbon, diagonal, nilpotent
    std::vector<ChartRing> charts;
    std::vector<Component> components;
    std::string summary;
};

/// Labels where the pair needs a chart: the union of both zero divisors.
inline std::vector<std::string> chart_labels(const QuadDiff& a, const QuadDiff& b) {
    std::vector<std::string> out;
    for (const QuadDiff* q : {&a, &b})
        for (const auto& z : q->zeros())
            if (std::find(out.begin(), out.end(), z.label) == out.end()) out.push_back(z.label);
    if (out.empty()) out.push_back("*");
    return out;
}

inline void require_shared_charts(const QuadDiff& a, const QuadDiff& b) {
    if (a.is_zero() || b.is_zero() || a == b) return;
    for (const auto& z : a.zeros())
        if (b.multiplicity_at(z.label) && (!a.has_chart(z.label) || !b.has_chart(z.label)))
            throw MissingChart("shared zero '" + z.label + "' needs chart models for both differentials");
}

inline FiberProduct fiber_product(const QuadDiff& s1, const QuadDiff& s2) {
    require_shared_charts(s1, s2);
    FiberProduct fp;
    for (const auto& label : chart_labels(s1, s2)) {
        Poly a = s1.local_model(label), b = s2.local_model(label);
        fp.charts.push_back({label, a, b, product_chart_ring(a, b), product_chart_smooth(a, b)});
    }
    const std::string regime = pair_regime(s1, s2);
    if (regime == "nilpotent") {
        fp.kind = "nilpotent";
        fp.components.push_back({"Σ", 4, s1.curve().genus});
        fp.summary = "2Σ x_Σ 2Σ, supported on Σ";
    } else if (regime == "ribbon") {
        fp.kind = "split_ribbon";
        fp.components.push_back({"S", 2, std::nullopt});
        fp.summary = "split ribbon on S with ideal generated by the 2Σ coordinate (locally π*K^-1)";
    } else if (regime == "diagonal") {
        fp.kind = "diagonal";
        fp.components.push_back({"Δ+", 1, std::nullopt});
        fp.components.push_back({"Δ-", 1, std::nullopt});
        fp.summary = "two copies Δ+ = {u = v}, Δ- = {u = -v} of S meeting over the zeros of q";
    } else {
        const bool smooth = std::all_of(fp.charts.begin(), fp.charts.end(), [](const ChartRing& c) { return c.smooth; });
        fp.kind = smooth ? "smooth" : "singular";
        fp.components.push_back({"S1 x S2", 1, smooth ? std::optional<int>(12 * s1.curve().genus - 11) : std::nullopt});
        fp.summary = smooth ? "smooth ramified fourfold cover of Σ" : "fiber product is singular where ramification meets";
    }
    return fp;
}

struct PlusChart {
    std::string label;
    std::string source;
    std::string target;
    bool well_defined = false;
    bool source_smooth = false;
    KernelResult kernel;
    std::optional<std::string> coimage;
    std::optional<BlowupReport> blowup;
    std::string blowup_error;
};

struct PlusImage {
    std::string regime;
    std::string image;  // S12, Σ ∪ S′, 2S, 3Σ ...
    std::vector<PlusChart> charts;
    bool normalization_certified = false;
    std::string summary;
};

inline PlusChart analyze_plus_chart(const std::string& label, const Poly& a, const Poly& b, unsigned trunc) {
    PlusChart pc;
    pc.label = label;
    RingMorphism m = plus_comorphism(a, b);
    pc.source = m.source().describe();
    pc.target = m.target().describe();
    pc.well_defined = check_well_defined(m).ok;
    pc.source_smooth = product_chart_smooth(a, b);
    pc.kernel = kernel_conditions(m, default_degree_bound(a, b));
    if (!pc.kernel.generators.empty() && pc.kernel.status == KernelStatus::solved)
        pc.coimage = coimage(m, pc.kernel).describe();
    if (a.is_zero() != b.is_zero()) {
        const Poly& q = a.is_zero() ? b : a;
        if (q.constant_term().is_zero()) {
            try {
                pc.blowup = verify_blowup_local(q, trunc);
            } catch (const PreconditionError& e) {
                pc.blowup_error = e.what();
            }
        }
    }
    return pc;
}

/// Image of the plus map S1 x_Σ S2 -> |K| in the three regimes.
inline PlusImage plus_image(const QuadDiff& s1, const QuadDiff& s2, unsigned trunc = 8) {
    require_shared_charts(s1, s2);
    PlusImage out;
    out.regime = pair_regime(s1, s2);
    if (out.regime == "proportional")
        throw std::invalid_argument("plus_image: proportional pairs q1 = λ q2 (λ != 1) are not modelled");
    for (const auto& label : chart_labels(s1, s2))
        out.charts.push_back(analyze_plus_chart(label, s1.local_model(label), s2.local_model(label), trunc));
    if (out.regime == "generic") {
        // A node model: both differentials are units and q1 - q2 has a simple zero.
        const Context& t = chart_context();
        out.charts.push_back(analyze_plus_chart("node", Poly::constant(t, Rational(1)),
                                                Poly::constant(t, Rational(1)) + Poly::variable(t, "t"), trunc));
        bool ok = true;
        for (const auto& pc : out.charts)
            ok = ok && pc.well_defined && pc.source_smooth && pc.kernel.generators.empty() &&
                 pc.kernel.status == KernelStatus::solved;
        out.normalization_certified = ok;
        out.image = "S12";
        out.summary = ok ? "nodal S12; plus map injective on every chart with smooth source, normalization certified"
                         : "S12; normalization not certified at every chart";
    } else if (out.regime == "diagonal") {
        out.image = "Σ ∪ S′";
        out.summary = "kernel generated by u(u^2 - 4q̄); image Σ ∪ S′ with S′ = {η^2 = 4q}";
    } else if (out.regime == "ribbon") {
        out.image = "2S";
        bool ok = true;
        for (const auto& pc : out.charts)
            ok = ok && pc.kernel.generators.empty() && pc.blowup && pc.blowup->status == CheckStatus::pass;
        out.normalization_certified = ok;
        out.summary = ok ? "2S; plus map is the blow-up at the ramification divisor on every chart"
                         : "2S; blow-up not certified at every chart";
    } else {
        out.image = "3Σ";
        out.summary = "kernel generated by u^3; image 3Σ";
    }
    return out;
}

/// Module over a chart ring, given by commuting R-matrices for each fiber variable.
class LocalModule {
public:
    LocalModule(RelationSet ring, std::vector<PolyMatrix> actions) : ring_(std::move(ring)), actions_(std::move(actions)) {
        if (actions_.size() != ring_.fiber_count()) throw std::invalid_argument("need one action per fiber variable");
        rank_ = actions_.empty() ? 0 : actions_.front().rows();
        const Context& base = ring_.base_context();
        for (auto& a : actions_) {
            if (!a.is_square() || a.rows() != rank_) throw std::invalid_argument("action matrices must be square of equal size");
            a = a.embed(base);
        }
        for (std::size_t i = 0; i < actions_.size(); ++i)
            for (std::size_t j = i + 1; j < actions_.size(); ++j)
                if (!(actions_[i] * actions_[j] == actions_[j] * actions_[i]))
                    throw std::invalid_argument("action matrices do not commute");
        for (const auto& rel : ring_.relations())
            if (!evaluate(rel).is_zero())
                throw std::invalid_argument("action violates relation " + to_string(rel));
    }

    const RelationSet& ring() const noexcept { return ring_; }
    std::size_t rank() const noexcept { return rank_; }
    const std::vector<PolyMatrix>& actions() const noexcept { return actions_; }

    /// Action of an element of the ring (fiber variables -> matrices).
    PolyMatrix evaluate(const Poly& p) const {
        const Context& base = ring_.base_context();
        const std::size_t nf = ring_.fiber_count();
        PolyMatrix out(base, rank_, rank_);
        const PolyMatrix id = PolyMatrix::identity(base, rank_);
        for (const auto& [e, c] : p.terms()) {
            Exponents be(e.begin() + static_cast<long>(nf), e.end());
            PolyMatrix term = Poly::monomial(base, be, c) * id;
            for (std::size_t i = 0; i < nf; ++i)
                for (unsigned k = 0; k < e[i]; ++k) term = term * actions_[i];
            out += term;
        }
        return out;
    }

private:
    RelationSet ring_;
    std::vector<PolyMatrix> actions_;
    std::size_t rank_ = 0;
};

/// The ring itself as a module: multiplication matrices in the normal-form basis.
inline LocalModule free_module(const RelationSet& ring) {
    const auto basis = ring.basis();
    std::vector<PolyMatrix> actions;
    for (std::size_t i = 0; i < ring.fiber_count(); ++i) {
        PolyMatrix m(ring.base_context(), basis.size(), basis.size());
        const Poly w = ring.var(ring.fiber_name(i));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            auto col = ring.coordinates(ring.normal_form(w * ring.basis_element(basis[j])));
            for (std::size_t r = 0; r < basis.size(); ++r) m(r, j) = col[r];
        }
        actions.push_back(std::move(m));
    }
    return LocalModule(ring, std::move(actions));
}

inline LocalModule zero_module(const RelationSet& ring) {
    return LocalModule(ring, std::vector<PolyMatrix>(ring.fiber_count(), PolyMatrix(ring.base_context(), 0, 0)));
}

/// Exterior tensor product over R: fiber variables of M1 act on the left factor.
inline LocalModule box_product(const LocalModule& m1, const LocalModule& m2) {
    const RelationSet& r1 = m1.ring();
    const RelationSet& r2 = m2.ring();
    if (!(r1.base_context() == r2.base_context())) throw std::invalid_argument("box_product: base rings differ");
    std::vector<std::string> fibers;
    for (std::size_t i = 0; i < r1.fiber_count(); ++i) fibers.push_back(r1.fiber_name(i));
    for (std::size_t i = 0; i < r2.fiber_count(); ++i) {
        if (std::find(fibers.begin(), fibers.end(), r2.fiber_name(i)) != fibers.end())
            throw std::invalid_argument("box_product: fiber variable '" + r2.fiber_name(i) + "' occurs in both rings");
        fibers.push_back(r2.fiber_name(i));
    }
    std::vector<std::string> all = fibers;
    for (const auto& n : r1.base_context().names()) all.push_back(n);
    Context ctx(all);
    std::vector<Poly> rels;
    for (const auto& r : r1.relations()) rels.push_back(r.embed(ctx));
    for (const auto& r : r2.relations()) rels.push_back(r.embed(ctx));
    RelationSet ring(fibers, r1.base_context().names(), rels);
    const Context& base = r1.base_context();
    const PolyMatrix i1 = PolyMatrix::identity(base, m1.rank());
    const PolyMatrix i2 = PolyMatrix::identity(base, m2.rank());
    std::vector<PolyMatrix> actions;
    // m1 index runs fastest, matching RelationSet::basis() ordering.
    for (const auto& a : m1.actions()) actions.push_back(kron(i2, a));
    for (const auto& b : m2.actions()) actions.push_back(kron(b, i1));
    return LocalModule(ring, std::move(actions));
}

struct DirectImage {
    std::size_t rank = 0;
    PolyMatrix phi;
    CharPoly charpoly;
};

/// Multiplication by θ on the module, as an R-matrix, and its char poly.
inline DirectImage direct_image_higgs(const LocalModule& m, const Poly& theta) {
    PolyMatrix phi = m.evaluate(theta.embed(m.ring().context()));
    if (phi.rows() == 0) return {0, phi, CharPoly({Poly::constant(phi.context(), Rational(1))})};
    return {m.rank(), phi, char_poly(phi)};
}

/// Degrees of 𝓛 = p1*L ⊗ p2*σ*L restricted to the diagonals Δ+ and Δ-.
inline std::pair<long, long> diagonal_restriction(long l_deg) { return {0, 2 * l_deg}; }

struct SplitRibbonCheck {
    bool ideal_squares_to_zero = false;
    bool ideal_free_rank_one = false;
};

/// For R[u,v]/(u^2, v^2 - q̄): (u)^2 = 0 and (u) ≅ R[v]/(v^2 - q̄) via s -> s·u.
inline SplitRibbonCheck split_ribbon_check(const RelationSet& ring) {
    if (ring.fiber_count() != 2) throw std::invalid_argument("split_ribbon_check expects two fiber variables");
    SplitRibbonCheck out;
    const Poly u = ring.var(ring.fiber_name(0));
    out.ideal_squares_to_zero = ring.normal_form(u * u).is_zero();
    const Poly v = ring.var(ring.fiber_name(1));
    const unsigned k = ring.degrees()[1];
    linear::Matrix images;
    Poly vp = ring.constant(Rational(1));
    for (unsigned j = 0; j < k; ++j) {
        images.push_back(ring.coordinates(ring.normal_form(vp * u)));
        vp = vp * v;
    }
    out.ideal_free_rank_one = linear::rank(images) == k;
    return out;
}

}  // namespace hitch

#endif  // HITCHKIT_SPECTRAL_HPP
