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
 * Truncated power series over a quotient ring.
 *
 * Each variable carries a positive weight and everything of weighted degree
 * >= N is discarded. Relations must be weighted-homogeneous from below (every
 * term of weight >= the weight of the leading power), so that reducing never
 * lowers weight and truncation commutes with normal forms.
 */

#ifndef HITCHKIT_SERIES_HPP
#define HITCHKIT_SERIES_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hitchkit/poly.hpp"
#include "hitchkit/quotient_ring.hpp"

namespace hitch {

class SeriesRing {
public:
    SeriesRing(RelationSet ring, const std::map<std::string, unsigned>& weights, unsigned order)
        : ring_(std::move(ring)), order_(order) {
        if (order == 0) throw std::invalid_argument("truncation order must be positive");
        const Context& ctx = ring_.context();
        weights_.assign(ctx.size(), 1);
        for (const auto& [name, w] : weights) {
            if (w == 0) throw std::invalid_argument("weights must be positive");
            weights_[ctx.require(name)] = w;
        }
        for (std::size_t i = 0; i < ring_.fiber_count(); ++i) {
            const unsigned lead = weights_[i] * ring_.degrees()[i];
            for (const auto& [e, c] : ring_.relations()[i].terms())
                if (weight(e) < lead)
                    throw std::invalid_argument("relation for '" + ring_.fiber_name(i) +
                                                "' has a term of lower weight than its leading power");
        }
    }

    const RelationSet& ring() const noexcept { return ring_; }
    const Context& context() const noexcept { return ring_.context(); }
    unsigned order() const noexcept { return order_; }
    unsigned weight_of(std::string_view var) const { return weights_[ring_.context().require(var)]; }

    unsigned weight(const Exponents& e) const {
        unsigned w = 0;
        for (std::size_t i = 0; i < e.size(); ++i) w += weights_[i] * e[i];
        return w;
    }
    /// Lowest weight of a term; order() for the zero series.
    unsigned valuation(const Poly& p) const {
        unsigned v = order_;
        for (const auto& [e, c] : p.terms()) v = std::min(v, weight(e));
        return v;
    }

    Poly truncate(const Poly& p) const {
        Poly out(p.context());
        for (const auto& [e, c] : p.terms())
            if (weight(e) < order_) out.add_term(e, c);
        return out;
    }
    Poly reduce(const Poly& p) const { return truncate(ring_.normal_form(truncate(p))); }
    Poly mul(const Poly& a, const Poly& b) const { return reduce(truncate(a) * truncate(b)); }

    Poly var(std::string_view name) const { return ring_.var(name); }
    Poly constant(const Rational& c) const { return ring_.constant(c); }

    /// p(images) reduced and truncated; images live in this ring's context.
    Poly evaluate(const Poly& p, const std::vector<Poly>& images) const {
        if (images.size() != p.context().size()) throw std::invalid_argument("image count does not match context");
        std::vector<std::vector<Poly>> powers(images.size());
        auto power = [&](std::size_t v, unsigned k) -> const Poly& {
            auto& cache = powers[v];
            if (cache.empty()) cache.push_back(constant(Rational(1)));
            while (cache.size() <= k) cache.push_back(mul(cache.back(), images[v]));
            return cache[k];
        };
        Poly out(context());
        for (const auto& [e, c] : p.terms()) {
            Poly term = constant(c);
            for (std::size_t v = 0; v < e.size(); ++v)
                if (e[v]) term = mul(term, power(v, e[v]));
            out += term;
        }
        return reduce(out);
    }

private:
    RelationSet ring_;
    std::vector<unsigned> weights_;
    unsigned order_;
};

/// Map between series rings given by generator images in the target.
class SeriesMorphism {
public:
    SeriesMorphism(const SeriesRing* source, const SeriesRing* target, const std::map<std::string, Poly>& images)
        : source_(source), target_(target) {
        const Context& sc = source_->context();
        for (std::size_t v = 0; v < sc.size(); ++v) {
            auto it = images.find(sc.name(v));
            if (it == images.end()) throw std::invalid_argument("no image for generator '" + sc.name(v) + "'");
            images_.push_back(target_->reduce(it->second.embed(target_->context())));
        }
    }
    const SeriesRing& source() const { return *source_; }
    const SeriesRing& target() const { return *target_; }
    const std::vector<Poly>& images() const noexcept { return images_; }

    Poly apply(const Poly& p) const { return target_->evaluate(p, images_); }

private:
    const SeriesRing* source_;
    const SeriesRing* target_;
    std::vector<Poly> images_;
};

/// Compositional inverse of a univariate f with f(0) = 0, f'(0) != 0:
/// the polynomial g in `var` with f(g(s)) = s mod s^order.
inline Poly inverse_series(const Poly& f, std::size_t var, unsigned order) {
    if (!f.constant_term().is_zero()) throw std::invalid_argument("inverse_series: f(0) must vanish");
    for (std::size_t v : f.used_variables())
        if (v != var) throw std::invalid_argument("inverse_series: f must be univariate");
    Exponents e1(f.context().size(), 0);
    e1[var] = 1;
    auto it = f.terms().find(e1);
    if (it == f.terms().end()) throw std::invalid_argument("inverse_series: f'(0) vanishes");
    const Rational inv = Rational(1) / it->second;
    auto trunc = [&](const Poly& p) {
        Poly out(p.context());
        for (const auto& [e, c] : p.terms())
            if (e[var] < order) out.add_term(e, c);
        return out;
    };
    auto compose = [&](const Poly& g) {
        std::vector<Poly> images;
        for (std::size_t v = 0; v < f.context().size(); ++v)
            images.push_back(v == var ? g : Poly::variable(f.context(), f.context().name(v)));
        Poly out(f.context());
        Poly power = Poly::constant(f.context(), Rational(1));
        for (unsigned k = 0; k <= f.degree_in(var); ++k) {
            out += f.coefficient(var, k) * power;
            power = trunc(power * g);
        }
        return trunc(out);
    };
    const Poly s = Poly::monomial(f.context(), e1, Rational(1));
    Poly g(f.context());
    for (unsigned step = 0; step < order; ++step) g = trunc(g - (compose(g) - s) * inv);
    return g;
}

}  // namespace hitch

#endif  // HITCHKIT_SERIES_HPP
