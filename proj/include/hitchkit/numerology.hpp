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
 * Genus, degree and dimension bookkeeping for spectral data.
 *
 * "Generic" cohomology assumes a nonspecial line bundle (or a generic
 * effective divisor); every such assumption is labelled in the reports.
 */

#ifndef HITCHKIT_NUMEROLOGY_HPP
#define HITCHKIT_NUMEROLOGY_HPP

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hitchkit/poly.hpp"
#include "hitchkit/poly_text.hpp"

namespace hitch {

inline void require_genus(long g) {
    if (g < 2) throw std::invalid_argument("genus must be at least 2");
}

/// Genus of a degree-n cover of a genus-g curve with branch degree b:
/// 2 g_S - 2 = n (2g - 2) + b.
inline long riemann_hurwitz(long g_base, long cover_deg, long branch_deg) {
    if (g_base < 0 || cover_deg < 1 || branch_deg < 0) throw std::invalid_argument("riemann_hurwitz: bad arguments");
    const long twice = cover_deg * (2 * g_base - 2) + branch_deg + 2;
    if (twice % 2) throw std::domain_error("riemann_hurwitz: odd branch degree gives a non-integer genus");
    return twice / 2;
}

struct RiemannRoch {
    long chi = 0;
    long generic_h0 = 0;
    long generic_h1 = 0;
};

/// χ = deg - g + 1 with generic h0; `canonical` selects L = K (h0 = g).
inline RiemannRoch riemann_roch(long deg, long genus, bool canonical = false) {
    if (genus < 0) throw std::invalid_argument("riemann_roch: negative genus");
    RiemannRoch r;
    r.chi = deg - genus + 1;
    if (canonical) {
        if (deg != 2 * genus - 2) throw std::invalid_argument("riemann_roch: canonical bundle has degree 2g-2");
        r.generic_h0 = genus;
    } else if (deg < 0) {
        r.generic_h0 = 0;
    } else if (deg > 2 * genus - 2) {
        r.generic_h0 = r.chi;
    } else {
        r.generic_h0 = std::max(r.chi, 0L);
    }
    r.generic_h1 = r.generic_h0 - r.chi;
    return r;
}

inline long prym_dim(long g_cover, long g_base) {
    if (g_cover < g_base) throw std::invalid_argument("prym_dim: cover genus below base genus");
    return g_cover - g_base;
}

/// Genus of the smooth rank-2 spectral curve: 4g - 3.
inline long spectral_genus(long g) {
    require_genus(g);
    return riemann_hurwitz(g, 2, 4 * g - 4);
}

enum class ComponentKind { su2_sl2r, so_star4, prym_of_ribbon, torsion2 };

inline std::optional<ComponentKind> parse_component_kind(const std::string& s) {
    static const std::map<std::string, ComponentKind> names{{"SU2xSL2R", ComponentKind::su2_sl2r},
                                                            {"SO*(4)", ComponentKind::so_star4},
                                                            {"PrymOfRibbon", ComponentKind::prym_of_ribbon},
                                                            {"torsion2", ComponentKind::torsion2}};
    auto it = names.find(s);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

inline long component_counts(ComponentKind kind, long g) {
    require_genus(g);
    switch (kind) {
        case ComponentKind::su2_sl2r: return 2 * g - 1;
        case ComponentKind::so_star4: return 4 * g - 3;
        case ComponentKind::prym_of_ribbon:
        case ComponentKind::torsion2: return 1L << (2 * g);
    }
    throw std::invalid_argument("unknown component kind");
}

inline long component_counts(const std::string& kind, long g) {
    auto k = parse_component_kind(kind);
    if (!k) throw std::invalid_argument("unknown component kind '" + kind + "'");
    return component_counts(*k, g);
}

enum class StrataGroup { sl4, so4 };

inline std::optional<StrataGroup> parse_strata_group(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "sl4") return StrataGroup::sl4;
    if (s == "so4") return StrataGroup::so4;
    return std::nullopt;
}

struct StrataRow {
    std::string tag;          // "N", "A_d", or "A_d+" / "A_d-"
    long d = 0;
    long d1 = 0, d2 = 0;      // SL4 only
    long dbar = 0;            // SL4: degree of the divisor on S
    std::optional<long> dprime;  // SO4: deg D′, an explicit parameter
    long base = 0;
    long fiber = 0;
    long total = 0;
    long expected = 0;
    bool ok = false;
};

struct StrataTable {
    StrataGroup group;
    long genus = 2;
    std::vector<StrataRow> rows;
    bool all_ok() const {
        return std::all_of(rows.begin(), rows.end(), [](const StrataRow& r) { return r.ok; });
    }
};

inline long group_dimension(StrataGroup g) { return g == StrataGroup::sl4 ? 15 : 6; }

/// SL4 rows for d = 1..4(g-1) and SO4 rows for d = 1..2(g-1), each followed
/// by the N stratum. SO4 rows use the given d′ (default 0).
inline StrataTable strata_table(StrataGroup group, long g, long dprime = 0) {
    require_genus(g);
    const long gs = spectral_genus(g);
    StrataTable t{group, g, {}};
    const long expected = group_dimension(group) * (g - 1);
    if (group == StrataGroup::sl4) {
        for (long d = 1; d <= 4 * (g - 1); ++d) {
            StrataRow r;
            r.tag = "A_" + std::to_string(d);
            r.d = d;
            r.d1 = -d + 2 * (g - 1);
            r.d2 = d + 2 * (g - 1);
            r.dbar = -2 * d + 2 * (gs - 1);
            r.base = prym_dim(gs, g) + r.dbar;
            r.fiber = riemann_roch(r.dbar - (2 * gs - 2), gs).generic_h1;
            r.total = r.base + r.fiber;
            r.expected = expected;
            r.ok = r.total == expected;
            t.rows.push_back(r);
        }
        StrataRow n;
        n.tag = "N";
        n.base = 4 * gs - 3 - g;
        n.total = n.base;
        n.expected = expected;
        n.ok = n.total == expected;
        t.rows.push_back(n);
    } else {
        if (dprime < 0 || dprime > 3 * (g - 1)) throw std::invalid_argument("d′ must lie in [0, 3(g-1)]");
        for (long d = 1; d <= 2 * (g - 1); ++d) {
            StrataRow r;
            r.tag = "A_" + std::to_string(d) + (d % 2 == 0 ? "+" : "-");
            r.d = d;
            r.dprime = dprime;
            r.base = prym_dim(gs, g) + dprime;
            r.fiber = riemann_roch(dprime - (2 * g - 2), g).generic_h1;
            r.total = r.base + r.fiber;
            r.expected = expected;
            r.ok = r.total == expected;
            t.rows.push_back(r);
        }
        StrataRow n;
        n.tag = "N";
        n.total = n.base = expected;
        n.expected = expected;
        n.ok = true;
        t.rows.push_back(n);
    }
    return t;
}

/// Symbolic SO4 row total in a variable d′: base + fiber must not depend on d′.
struct SymbolicRow {
    Poly base;
    Poly fiber;
    Poly total;
};

inline SymbolicRow so4_row_symbolic(long g) {
    require_genus(g);
    const Context ctx{"d'"};
    const Poly dp = Poly::variable(ctx, "d'");
    SymbolicRow r{Poly::constant(ctx, Rational(prym_dim(spectral_genus(g), g))) + dp,
                  Poly::constant(ctx, Rational(3 * (g - 1))) - dp, Poly(ctx)};
    r.total = r.base + r.fiber;
    return r;
}

struct DimEntry {
    std::string name;
    long value = 0;
    std::string assumption;
};

struct DimReport {
    std::string identity;
    std::vector<DimEntry> entries;
    long computed = 0;
    long claimed = 0;
    bool ok = false;  // false means flagged
};

/// h1(Σ, K^-1(D′)) + dim Prym(S, Σ) against the claimed 6(g-1).
inline DimReport dim_audit_prym_sequence(long g, long dprime) {
    require_genus(g);
    if (dprime < 0 || dprime > 3 * (g - 1)) throw std::invalid_argument("d′ must lie in [0, 3(g-1)]");
    DimReport r;
    r.identity = "h1(Σ, K^-1(D′)) + dim Prym(S, Σ) = 6(g-1)";
    const long h1 = riemann_roch(dprime - (2 * g - 2), g).generic_h1;
    const long prym = prym_dim(spectral_genus(g), g);
    r.entries.push_back({"h1(Σ, K^-1(D′))", h1, "generic D′ (Serre duality: h0(K^2(-D′)))"});
    r.entries.push_back({"dim Prym(S, Σ)", prym, "smooth S"});
    r.computed = h1 + prym;
    r.claimed = 6 * (g - 1);
    r.ok = r.computed == r.claimed;
    return r;
}

enum class SemistableGroup { sl2r, so_star4 };

inline std::optional<SemistableGroup> parse_semistable_group(const std::string& s) {
    if (s == "SL2R") return SemistableGroup::sl2r;
    if (s == "SO*(4)") return SemistableGroup::so_star4;
    return std::nullopt;
}

/// Degree-bound rules: deg 0 always passes; deg < 0 needs β != 0, deg > 0
/// needs γ != 0; |deg| <= g-1 (SL2R) or 2g-2 (SO*(4)).
inline bool semistability_check(SemistableGroup group, long g, long deg, bool beta_nonzero, bool gamma_nonzero) {
    require_genus(g);
    if (deg == 0) return true;
    if (deg < 0 && !beta_nonzero) return false;
    if (deg > 0 && !gamma_nonzero) return false;
    const long bound = group == SemistableGroup::sl2r ? g - 1 : 2 * g - 2;
    return std::labs(deg) <= bound;
}

inline long isogeny_component_map(long d, long g) {
    require_genus(g);
    if (std::labs(d) > g - 1) throw std::invalid_argument("|d| must be at most g-1");
    return 2 * d;
}

struct SpectralDegrees {
    long deg_L = 0;             // line bundle on S for SL2C spectral data
    long ramification = 0;      // deg R_π
    long deg_KS = 0;            // 2 g_S - 2
    long g_S = 0;
    bool dbar_formulas_agree = false;  // -2d + 2(g_S - 1) == -2d + 8(g - 1) for all d
};

inline SpectralDegrees spectral_degrees(long g) {
    require_genus(g);
    SpectralDegrees s;
    s.g_S = spectral_genus(g);
    s.deg_L = 2 * (g - 1);
    s.ramification = 4 * g - 4;
    s.deg_KS = 2 * s.g_S - 2;
    s.dbar_formulas_agree = true;
    for (long d = 1; d <= 4 * (g - 1); ++d)
        if (-2 * d + 2 * (s.g_S - 1) != -2 * d + 8 * (g - 1)) s.dbar_formulas_agree = false;
    return s;
}

}  // namespace hitch

#endif  // HITCHKIT_NUMEROLOGY_HPP
