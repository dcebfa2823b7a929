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
 * Quotient rings R[w1,...,wk]/(f1,...,fk) with a triangular presentation.
 *
 * R is the polynomial ring in the base variables. Each fiber variable wi has
 * exactly one relation fi, monic in wi, which may only mention wi and the
 * variables declared after it. Reduction therefore terminates, and the
 * monomials with wi-exponent below deg(fi) form a finite R-basis.
 */

#ifndef HITCHKIT_QUOTIENT_RING_HPP
#define HITCHKIT_QUOTIENT_RING_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hitchkit/linear.hpp"
#include "hitchkit/poly.hpp"
#include "hitchkit/poly_text.hpp"

namespace hitch {

class RelationSet {
public:
    RelationSet(std::vector<std::string> fiber_vars, std::vector<std::string> base_vars, std::vector<Poly> relations)
        : fiber_count_(fiber_vars.size()), base_(base_vars) {
        std::vector<std::string> all = std::move(fiber_vars);
        all.insert(all.end(), base_vars.begin(), base_vars.end());
        ctx_ = Context(std::move(all));
        if (relations.size() != fiber_count_) throw std::invalid_argument("need exactly one relation per fiber variable");
        for (std::size_t i = 0; i < fiber_count_; ++i) {
            Poly f = relations[i].embed(ctx_);
            for (std::size_t j = 0; j < i; ++j)
                if (f.uses(j))
                    throw std::invalid_argument("relation for '" + ctx_.name(i) + "' mentions earlier variable '" +
                                                ctx_.name(j) + "'");
            const unsigned k = f.degree_in(i);
            if (k == 0) throw std::invalid_argument("relation for '" + ctx_.name(i) + "' does not involve it");
            auto lead = f.coefficient(i, k).as_constant();
            if (!lead || !lead->is_one())
                throw std::invalid_argument("relation for '" + ctx_.name(i) + "' is not monic");
            relations_.push_back(std::move(f));
            degrees_.push_back(k);
        }
    }

    /// Convenience constructor from relation text in the ring's variables.
    static RelationSet parse(std::vector<std::string> fiber_vars, std::vector<std::string> base_vars,
                             const std::vector<std::string>& relation_texts) {
        std::vector<std::string> all = fiber_vars;
        all.insert(all.end(), base_vars.begin(), base_vars.end());
        Context ctx(all);
        std::vector<Poly> rels;
        for (const auto& t : relation_texts) rels.push_back(parse_poly(t, ctx));
        return RelationSet(std::move(fiber_vars), std::move(base_vars), std::move(rels));
    }

    const Context& context() const noexcept { return ctx_; }
    const Context& base_context() const noexcept { return base_; }
    std::size_t fiber_count() const noexcept { return fiber_count_; }
    const std::vector<Poly>& relations() const noexcept { return relations_; }
    const std::vector<unsigned>& degrees() const noexcept { return degrees_; }
    const std::string& fiber_name(std::size_t i) const { return ctx_.name(i); }

    Poly poly(std::string_view text) const { return parse_poly(text, ctx_); }
    Poly var(std::string_view name) const { return Poly::variable(ctx_, name); }
    Poly constant(const Rational& c) const { return Poly::constant(ctx_, c); }

    /// Unique reduced representative of p.
    Poly normal_form(const Poly& p) const {
        if (!(p.context() == ctx_)) throw ContextMismatch("polynomial is not in the ring's variable context");
        Poly cur = p;
        for (std::size_t i = 0; i < fiber_count_; ++i) {
            const unsigned k = degrees_[i];
            const unsigned top = cur.degree_in(i);
            if (top < k) continue;
            // powers[e - k] = w^e reduced in w.
            std::vector<Poly> powers;
            Exponents wk(ctx_.size(), 0);
            wk[i] = k;
            powers.push_back(Poly::monomial(ctx_, wk, Rational(1)) - relations_[i]);
            Exponents w1(ctx_.size(), 0);
            w1[i] = 1;
            const Poly w = Poly::monomial(ctx_, w1, Rational(1));
            for (unsigned e = k + 1; e <= top; ++e) {
                Poly next = powers.back() * w;
                Poly spill = next.coefficient(i, k);
                Poly lower(ctx_);
                for (const auto& [ex, c] : next.terms())
                    if (ex[i] < k) lower.add_term(ex, c);
                powers.push_back(lower + spill * powers.front());
            }
            Poly out(ctx_);
            for (const auto& [ex, c] : cur.terms()) {
                if (ex[i] < k) {
                    out.add_term(ex, c);
                    continue;
                }
                Exponents rest = ex;
                const unsigned e = rest[i];
                rest[i] = 0;
                out += Poly::monomial(ctx_, rest, c) * powers[e - k];
            }
            cur = std::move(out);
        }
        return cur;
    }

    bool is_reduced(const Poly& p) const {
        for (std::size_t i = 0; i < fiber_count_; ++i)
            if (p.degree_in(i) >= degrees_[i]) return false;
        return true;
    }

    /// Normal-form monomials, first fiber variable varying fastest
    /// ({1, u, v, uv} for two quadratic relations).
    std::vector<Exponents> basis() const {
        std::vector<Exponents> out;
        Exponents e(ctx_.size(), 0);
        for (;;) {
            out.push_back(e);
            std::size_t i = 0;
            while (i < fiber_count_) {
                if (++e[i] < degrees_[i]) break;
                e[i] = 0;
                ++i;
            }
            if (i == fiber_count_) break;
        }
        return out;
    }
    std::size_t rank_over_base() const {
        std::size_t r = 1;
        for (unsigned d : degrees_) r *= d;
        return r;
    }
    Poly basis_element(const Exponents& e) const { return Poly::monomial(ctx_, e, Rational(1)); }

    /// Coordinates of a reduced element in basis(), as polynomials in the base context.
    std::vector<Poly> coordinates(const Poly& reduced) const {
        auto b = basis();
        std::vector<Poly> out(b.size(), Poly(base_));
        for (const auto& [e, c] : reduced.terms()) {
            Exponents fiber(e.begin(), e.begin() + static_cast<long>(fiber_count_));
            Exponents base(e.begin() + static_cast<long>(fiber_count_), e.end());
            std::size_t idx = 0, stride = 1;
            for (std::size_t i = 0; i < fiber_count_; ++i) {
                if (fiber[i] >= degrees_[i]) throw std::invalid_argument("element is not reduced");
                idx += fiber[i] * stride;
                stride *= degrees_[i];
            }
            out[idx].add_term(std::move(base), c);
        }
        return out;
    }
    Poly from_coordinates(const std::vector<Poly>& coords) const {
        auto b = basis();
        if (coords.size() != b.size()) throw std::invalid_argument("coordinate count does not match basis");
        Poly out(ctx_);
        for (std::size_t j = 0; j < b.size(); ++j) out += coords[j].embed(ctx_) * basis_element(b[j]);
        return out;
    }

    std::string describe() const {
        std::ostringstream os;
        os << "Q[";
        for (std::size_t i = 0; i < base_.size(); ++i) os << (i ? "," : "") << base_.name(i);
        os << "][";
        for (std::size_t i = 0; i < fiber_count_; ++i) os << (i ? "," : "") << ctx_.name(i);
        os << "]/(";
        for (std::size_t i = 0; i < relations_.size(); ++i) os << (i ? ", " : "") << to_string(relations_[i]);
        os << ")";
        return os.str();
    }

    friend bool operator==(const RelationSet& a, const RelationSet& b) {
        return a.ctx_ == b.ctx_ && a.fiber_count_ == b.fiber_count_ && a.relations_ == b.relations_;
    }

private:
    std::size_t fiber_count_;
    Context base_;
    Context ctx_;
    std::vector<Poly> relations_;
    std::vector<unsigned> degrees_;
};

/// Element of a quotient ring, always stored in normal form.
class QuotientElem {
public:
    QuotientElem(RelationSet ring, const Poly& p) : ring_(std::move(ring)), value_(ring_.normal_form(p)) {}

    const RelationSet& ring() const noexcept { return ring_; }
    const Poly& value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_.is_zero(); }

    friend QuotientElem operator+(const QuotientElem& a, const QuotientElem& b) {
        a.require_same(b);
        return {a.ring_, a.value_ + b.value_};
    }
    friend QuotientElem operator-(const QuotientElem& a, const QuotientElem& b) {
        a.require_same(b);
        return {a.ring_, a.value_ - b.value_};
    }
    friend QuotientElem operator*(const QuotientElem& a, const QuotientElem& b) {
        a.require_same(b);
        return {a.ring_, a.value_ * b.value_};
    }
    friend bool operator==(const QuotientElem& a, const QuotientElem& b) {
        return a.ring_ == b.ring_ && a.value_ == b.value_;
    }

private:
    void require_same(const QuotientElem& o) const {
        if (!(ring_ == o.ring_)) throw ContextMismatch("quotient elements live in different rings");
    }
    RelationSet ring_;
    Poly value_;
};

/// Ring map given by the images of generators. Source base variables not
/// listed in `images` map to the same-named target variable.
class RingMorphism {
public:
    RingMorphism(RelationSet source, RelationSet target, const std::map<std::string, Poly>& images)
        : source_(std::move(source)), target_(std::move(target)) {
        const Context& sc = source_.context();
        for (const auto& [name, im] : images)
            if (!sc.contains(name)) throw std::invalid_argument("image given for unknown generator '" + name + "'");
        for (std::size_t v = 0; v < sc.size(); ++v) {
            auto it = images.find(sc.name(v));
            if (it != images.end()) {
                images_.push_back(it->second.embed(target_.context()));
                if (v >= source_.fiber_count()) base_preserved_ = false;
            } else if (v < source_.fiber_count()) {
                throw std::invalid_argument("no image for generator '" + sc.name(v) + "'");
            } else {
                if (!target_.context().contains(sc.name(v)))
                    throw std::invalid_argument("base variable '" + sc.name(v) + "' missing from target");
                images_.push_back(Poly::variable(target_.context(), sc.name(v)));
            }
        }
    }

    /// Parses generator images as text in the target ring's variables.
    static RingMorphism parse(RelationSet source, RelationSet target,
                              const std::map<std::string, std::string>& image_texts) {
        std::map<std::string, Poly> images;
        for (const auto& [name, text] : image_texts) images.emplace(name, target.poly(text));
        return RingMorphism(std::move(source), std::move(target), images);
    }

    static RingMorphism identity(const RelationSet& ring) {
        std::map<std::string, Poly> images;
        for (std::size_t i = 0; i < ring.fiber_count(); ++i)
            images.emplace(ring.fiber_name(i), ring.var(ring.fiber_name(i)));
        return RingMorphism(ring, ring, images);
    }

    const RelationSet& source() const noexcept { return source_; }
    const RelationSet& target() const noexcept { return target_; }
    const std::vector<Poly>& images() const noexcept { return images_; }
    bool base_preserved() const noexcept { return base_preserved_; }

    /// Image of an arbitrary source-context polynomial, in target normal form.
    Poly apply_raw(const Poly& p) const {
        return target_.normal_form(p.evaluate_into(target_.context(), images_));
    }
    QuotientElem apply(const QuotientElem& p) const {
        if (!(p.ring() == source_)) throw ContextMismatch("element is not in the morphism's source ring");
        return {target_, apply_raw(p.value())};
    }

private:
    RelationSet source_;
    RelationSet target_;
    std::vector<Poly> images_;
    bool base_preserved_ = true;
};

inline QuotientElem apply_morphism(const RingMorphism& m, const QuotientElem& p) { return m.apply(p); }

struct WellDefinedReport {
    bool ok = true;
    /// (source relation, nonzero residue in the target) for each failure.
    std::vector<std::pair<Poly, Poly>> witnesses;
};

inline WellDefinedReport check_well_defined(const RingMorphism& m) {
    WellDefinedReport rep;
    for (const Poly& rel : m.source().relations()) {
        Poly residue = m.apply_raw(rel);
        if (!residue.is_zero()) {
            rep.ok = false;
            rep.witnesses.emplace_back(rel, residue);
        }
    }
    return rep;
}

enum class KernelStatus { solved, conditions_only };

inline const char* to_string(KernelStatus s) { return s == KernelStatus::solved ? "solved" : "conditions_only"; }

struct KernelResult {
    KernelStatus status = KernelStatus::solved;
    /// Unknowns a0..a(n-1) followed by the base variables.
    Context unknowns;
    /// Linear conditions over R on the coefficients of a generic source element.
    std::vector<Poly> conditions;
    /// Empty iff the kernel is zero (when solved).
    std::vector<QuotientElem> generators;
    std::size_t image_rank = 0;
    std::string note;
};

/// Matrix of m in the normal-form bases: column j is the image of source basis element j.
inline linear::Matrix morphism_matrix(const RingMorphism& m) {
    const auto sb = m.source().basis();
    const std::size_t rows = m.target().basis().size();
    linear::Matrix mat(rows, linear::Row(sb.size(), Poly(m.target().base_context())));
    for (std::size_t j = 0; j < sb.size(); ++j) {
        auto coords = m.target().coordinates(m.apply_raw(m.source().basis_element(sb[j])));
        for (std::size_t i = 0; i < rows; ++i) mat[i][j] = coords[i];
    }
    return mat;
}

/// Kernel of a base-preserving morphism, as a linear solve over R in the
/// source basis. Explicit generators are certified when R has at most one
/// variable and the kernel has rank at most one over Frac(R).
inline KernelResult kernel_conditions(const RingMorphism& m, unsigned coeff_degree_bound) {
    if (!m.base_preserved()) throw std::invalid_argument("kernel_conditions needs a morphism that fixes the base ring");
    KernelResult res;
    const auto sb = m.source().basis();
    const Context& base = m.target().base_context();
    std::vector<std::string> names;
    for (std::size_t j = 0; j < sb.size(); ++j) names.push_back("a" + std::to_string(j));
    for (const auto& n : base.names()) names.push_back(n);
    res.unknowns = Context(names);

    linear::Matrix mat = morphism_matrix(m);
    for (const auto& row : mat) {
        Poly cond(res.unknowns);
        for (std::size_t j = 0; j < row.size(); ++j)
            cond += row[j].embed(res.unknowns) * Poly::variable(res.unknowns, names[j]);
        if (!cond.is_zero()) res.conditions.push_back(std::move(cond));
    }

    auto kernel = linear::kernel_basis(mat, sb.size(), base);
    res.image_rank = sb.size() - kernel.size();
    if (kernel.empty()) {
        res.note = "injective";
        return res;
    }
    for (const auto& v : kernel) {
        Poly g(m.source().context());
        for (std::size_t j = 0; j < v.size(); ++j)
            g += v[j].embed(m.source().context()) * m.source().basis_element(sb[j]);
        res.generators.emplace_back(m.source(), g);
    }
    if (!linear::univariate_ring(base)) {
        res.status = KernelStatus::conditions_only;
        res.note = "base ring has several variables; generators span the kernel over the fraction field only";
    } else if (kernel.size() > 1) {
        res.status = KernelStatus::conditions_only;
        res.note = "kernel has rank > 1; saturation over R not certified";
    } else {
        for (const auto& x : kernel.front())
            if (x.total_degree() > coeff_degree_bound) {
                res.status = KernelStatus::conditions_only;
                res.note = "generator coefficients exceed the degree bound";
            }
    }
    return res;
}

/// Source relations augmented by the kernel generators. Supported when the
/// source has one fiber variable and the kernel is generated by an element
/// with constant leading coefficient.
inline RelationSet coimage(const RingMorphism& m, const KernelResult& kernel) {
    if (kernel.generators.empty()) return m.source();
    const RelationSet& src = m.source();
    if (src.fiber_count() != 1 || kernel.generators.size() != 1 || kernel.status != KernelStatus::solved)
        throw std::invalid_argument("coimage: only single-generator kernels on one fiber variable are supported");
    Poly g = make_monic(kernel.generators.front().value());
    auto lead = g.coefficient(0, g.degree_in(0)).as_constant();
    if (!lead) throw std::invalid_argument("coimage: kernel generator is not monic in the fiber variable");
    g *= Rational(1) / *lead;
    Poly rem = divide_in(src.relations().front(), g, 0).second;
    if (!rem.is_zero()) throw std::invalid_argument("coimage: relation is not a multiple of the kernel generator");
    std::vector<std::string> base = src.base_context().names();
    return RelationSet({src.fiber_name(0)}, base, {g.embed(src.context())});
}

/// Morphism induced on the coimage ring.
inline RingMorphism restrict_to_coimage(const RingMorphism& m, const RelationSet& coim) {
    std::map<std::string, Poly> images;
    const Context& sc = m.source().context();
    for (std::size_t v = 0; v < m.source().fiber_count(); ++v) images.emplace(sc.name(v), m.images()[v]);
    return RingMorphism(coim, m.target(), images);
}

class NotAnInvolution : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class RingInvolution {
public:
    explicit RingInvolution(RingMorphism map) : map_(std::move(map)) {
        if (!(map_.source() == map_.target())) throw NotAnInvolution("source and target differ");
        if (!check_well_defined(map_).ok) throw NotAnInvolution("map is not well defined");
        const RelationSet& r = map_.source();
        for (std::size_t v = 0; v < r.context().size(); ++v) {
            Poly gen = Poly::variable(r.context(), r.context().name(v));
            if (!(map_.apply_raw(map_.apply_raw(gen)) == r.normal_form(gen)))
                throw NotAnInvolution("square is not the identity on '" + r.context().name(v) + "'");
        }
    }
    const RingMorphism& map() const noexcept { return map_; }

private:
    RingMorphism map_;
};

struct EigenSplit {
    std::vector<QuotientElem> invariant;
    std::vector<QuotientElem> anti_invariant;
};

/// Splits the normal-form basis into the +1 and -1 eigenspaces.
inline EigenSplit involution_decompose(const RingInvolution& inv) {
    const RelationSet& ring = inv.map().source();
    const auto basis = ring.basis();
    EigenSplit out;
    auto collect = [&](int sign, std::vector<QuotientElem>& dest) {
        linear::Matrix kept;
        for (const auto& b : basis) {
            Poly x = ring.basis_element(b);
            Poly s = inv.map().apply_raw(x);
            Poly y = make_monic(sign > 0 ? x + s : x - s);
            if (y.is_zero()) continue;
            auto coords = ring.coordinates(y);
            linear::Matrix trial = kept;
            trial.push_back(coords);
            if (linear::rank(trial) > kept.size()) {
                kept.push_back(coords);
                dest.emplace_back(ring, y);
            }
        }
    };
    collect(+1, out.invariant);
    collect(-1, out.anti_invariant);
    return out;
}

/// Removes fiber variable `var` by setting it to `value` (which must not
/// mention it). The eliminated relation must become redundant.
inline RelationSet eliminate_fiber_variable(const RelationSet& ring, std::size_t var, const Poly& value) {
    if (var >= ring.fiber_count()) throw std::invalid_argument("not a fiber variable");
    if (value.uses(var)) throw std::invalid_argument("replacement mentions the eliminated variable");
    std::vector<std::string> fibers, base = ring.base_context().names();
    for (std::size_t i = 0; i < ring.fiber_count(); ++i)
        if (i != var) fibers.push_back(ring.fiber_name(i));
    std::vector<std::string> all = fibers;
    all.insert(all.end(), base.begin(), base.end());
    Context reduced(all);
    std::vector<Poly> images;
    for (std::size_t v = 0; v < ring.context().size(); ++v)
        images.push_back(v == var ? value.embed(reduced) : Poly::variable(reduced, ring.context().name(v)));
    std::vector<Poly> rels;
    for (std::size_t i = 0; i < ring.fiber_count(); ++i)
        if (i != var) rels.push_back(ring.relations()[i].evaluate_into(reduced, images));
    RelationSet out(fibers, base, rels);
    if (!out.normal_form(ring.relations()[var].evaluate_into(reduced, images)).is_zero())
        throw std::invalid_argument("eliminated relation is not redundant; re-triangularization unsupported");
    return out;
}

inline RelationSet rename_fiber_variables(const RelationSet& ring, const std::vector<std::string>& names) {
    if (names.size() != ring.fiber_count()) throw std::invalid_argument("wrong number of names");
    std::vector<std::string> base = ring.base_context().names();
    std::vector<std::string> all = names;
    all.insert(all.end(), base.begin(), base.end());
    Context renamed(all);
    std::vector<Poly> images;
    for (std::size_t v = 0; v < ring.context().size(); ++v)
        images.push_back(Poly::variable(renamed, renamed.name(v)));
    std::vector<Poly> rels;
    for (const auto& r : ring.relations()) rels.push_back(r.evaluate_into(renamed, images));
    return RelationSet(names, base, rels);
}

struct DiagonalIdeal {
    QuotientElem generator;
    RelationSet quotient;
};

struct DiagonalIdeals {
    DiagonalIdeal plus;   // (u - v): the diagonal copy of S
    DiagonalIdeal minus;  // (u + v): the anti-diagonal copy of S
};

/// Diagonal components of a self fiber product R[u,v]/(u^2 - q, v^2 - q).
inline DiagonalIdeals diagonal_ideals(const RelationSet& ring) {
    if (ring.fiber_count() != 2) throw std::invalid_argument("diagonal_ideals expects two fiber variables");
    const Poly u = ring.var(ring.fiber_name(0));
    const Poly v = ring.var(ring.fiber_name(1));
    auto make = [&](const Poly& gen, const Poly& v_value) {
        RelationSet q = rename_fiber_variables(eliminate_fiber_variable(ring, 1, v_value), {"w"});
        return DiagonalIdeal{QuotientElem(ring, gen), q};
    };
    return {make(u - v, u), make(u + v, -u)};
}

}  // namespace hitch

#endif  // HITCHKIT_QUOTIENT_RING_HPP
