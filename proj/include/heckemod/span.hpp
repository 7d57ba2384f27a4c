#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckemod/module_action.hpp"

namespace heckemod {

/// Row-echelon span of module vectors over F_p, restricted to a window.
/// Rows are kept fully reduced against each other with pivot coefficient 1,
/// ordered by pivot key, so the basis of a given span is unique and
/// independent of insertion order.
struct SpanBasis {
    Window window;
    uint32_t p;
    std::vector<ModuleVector> rows;
    std::vector<std::string> out_of_window;  // orbit vectors discarded by truncation

    SpanBasis(Window w, uint32_t prime) : window(w), p(prime) {}

    int dim() const { return static_cast<int>(rows.size()); }

    bool in_window(const ModuleVector& v) const {
        for (const auto& [k, c] : v.terms)
            if (!window.contains(k.a)) return false;
        return true;
    }

    ModuleVector reduce(ModuleVector v) const {
        PrimeField fp(p);
        for (const auto& row : rows) {
            if (v.is_zero()) break;
            const auto& pivot = row.terms.begin()->first;
            auto it = v.terms.find(pivot);
            if (it == v.terms.end()) continue;
            v.add_scaled(row, fp.neg(it->second), fp);
        }
        return v;
    }

    /// Inserts v's residue into the basis; returns false when v was already
    /// in the span. Vectors supported outside the window go to the ledger.
    bool insert(const ModuleVector& v) {
        if (!in_window(v)) {
            out_of_window.push_back(v.str());
            return false;
        }
        ModuleVector r = reduce(v);
        if (r.is_zero()) return false;
        PrimeField fp(p);
        const uint32_t lead = r.terms.begin()->second;
        if (lead != 1) {
            ModuleVector scaled;
            scaled.add_scaled(r, fp.inv(lead), fp);
            r = std::move(scaled);
        }
        // Back-substitute the new pivot out of the existing rows.
        const BasisFunction pivot = r.terms.begin()->first;
        for (auto& row : rows) {
            auto it = row.terms.find(pivot);
            if (it != row.terms.end()) row.add_scaled(r, fp.neg(it->second), fp);
        }
        auto pos = std::lower_bound(rows.begin(), rows.end(), r,
                                    [](const ModuleVector& x, const ModuleVector& y) {
                                        return x.terms.begin()->first < y.terms.begin()->first;
                                    });
        rows.insert(pos, std::move(r));
        return true;
    }

    /// True iff v reduces to zero against the basis. The support of v must
    /// lie inside the window.
    bool contains(const ModuleVector& v) const {
        if (!in_window(v))
            throw std::invalid_argument("SpanBasis::contains: support leaves the window");
        return reduce(v).is_zero();
    }
};

inline bool membership(const ModuleVector& v, const SpanBasis& s) { return s.contains(v); }

enum class ClosureMode {
    Translators,  // step by the region's two translation words
    RawWords,     // step by single generators of the case alphabet
};

namespace detail {

/// The two translation words available on a region, with the translations
/// they effect. Regular and semi-regular cases cover S_Id (and S_w1).
inline std::vector<std::pair<OperatorWord, LatticeVec>> translator_words(CharacterCase cse,
                                                                         const WeylElem& region) {
    using G = Generator;
    const auto id = WeylElem::identity(3);
    const auto w1 = WeylElem::omega1(3);
    switch (cse) {
        case CharacterCase::Iwahori:
            return composite_table(region);
        case CharacterCase::SemiRegular:
            if (region == id)
                return {{OperatorWord(cse, {G::TOmega1T0m1, G::TOmega1}), LatticeVec(-1, 0)},
                        {OperatorWord(cse, {G::TOmega1T0m1, G::TOmega1T0m1}), LatticeVec(-1, -1)}};
            if (region == w1)
                return {{OperatorWord(cse, {G::TOmega1, G::TOmega1T0m1}), LatticeVec(0, -1)},
                        {OperatorWord(cse, {G::TOmega1T0m1, G::TOmega1T0m1}), LatticeVec(-1, -1)}};
            throw std::domain_error("translator_words: no semi-regular translators on S_" +
                                    region.one_line());
        case CharacterCase::Regular:
            if (region == id)
                return {{OperatorWord(cse, {G::Ttm10}), LatticeVec(-1, 0)},
                        {OperatorWord(cse, {G::Ttm1m1}), LatticeVec(-1, -1)}};
            throw std::domain_error("translator_words: regular basis lives on S_Id only");
    }
    throw std::logic_error("translator_words: bad case");
}

inline std::vector<OperatorWord> step_words(const ModuleVector& v, const WeightConfig& cfg,
                                            ClosureMode mode) {
    if (mode == ClosureMode::RawWords) {
        std::vector<OperatorWord> out;
        for (Generator g : alphabet(cfg.cse)) out.emplace_back(cfg.cse, std::vector<Generator>{g});
        return out;
    }
    // Translator mode steps a vector by its region's words; this requires a
    // single region, which the translations themselves preserve.
    const WeylElem& region = v.terms.begin()->first.omega;
    for (const auto& [k, c] : v.terms)
        if (!(k.omega == region))
            throw std::invalid_argument("span_closure: translator mode needs single-region vectors");
    std::vector<OperatorWord> out;
    for (auto& [w, t] : translator_words(cfg.cse, region)) out.push_back(w);
    return out;
}

}  // namespace detail

/// Reduced span of { g | act_word(word, g) : words of length <= max_len }
/// intersected with the window. Out-of-window orbit vectors are recorded in
/// the ledger and still expanded, so nothing reachable inside the window is
/// missed. In translator mode a word counts as one step.
inline SpanBasis span_closure(const std::vector<ModuleVector>& gens, const WeightConfig& cfg,
                              const Window& w, int max_len,
                              ClosureMode mode = ClosureMode::Translators) {
    if (max_len < 1) throw std::invalid_argument("span_closure: max_len must be >= 1");
    SpanBasis span(w, cfg.p);
    std::set<std::string> seen;
    std::vector<ModuleVector> frontier;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (seen.insert(g.str()).second) {
            span.insert(g);
            frontier.push_back(g);
        }
    }
    for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::vector<ModuleVector> next;
        for (const auto& v : frontier) {
            for (const auto& word : detail::step_words(v, cfg, mode)) {
                ModuleVector u = act_word(word, v, cfg);
                if (u.is_zero()) continue;
                if (!seen.insert(u.str()).second) continue;
                span.insert(u);
                next.push_back(std::move(u));
            }
        }
        frontier = std::move(next);
    }
    return span;
}

/// Writes a* - a = m * (-1,0) + n * (-1,-1) and emits the case's word for m
/// copies of the (-1,0)-translator followed by n copies of the
/// (-1,-1)-translator. Requires a, a* in S_Id with a* proper to a.
inline OperatorWord find_transporter(const LatticeVec& a, const LatticeVec& a_star,
                                     CharacterCase cse) {
    const auto id = WeylElem::identity(3);
    if (!s_omega_contains(id, a) || !s_omega_contains(id, a_star))
        throw std::domain_error("find_transporter: endpoints must lie in S_Id");
    if (!is_proper(id, a_star, a))
        throw std::domain_error("find_transporter: target is not proper to source");
    const int m = (a_star.coords[1] - a_star.coords[0]) - (a.coords[1] - a.coords[0]);
    const int n = a.coords[1] - a_star.coords[1];
    const auto words = detail::translator_words(cse, id);
    OperatorWord out = OperatorWord::empty(cse);
    out.append(words[0].first.repeated(m));
    out.append(words[1].first.repeated(n));
    return out;
}

/// Window certificate for the failure of finite codimension: the submodule
/// M generated by f_{Id,a} (a_1 < a_2, a_2 < -1) meets the row space M''
/// spanned by { f_{Id,(x, a_2+1)} : x <= a_2+1 } trivially, while M'' grows
/// linearly with the window bound.
struct CorollaryReport {
    LatticeVec generator;
    CharacterCase cse;
    int c_value;
    uint32_t p;
    int bound;
    int dim_m;
    int dim_mpp;
    int dim_intersection;
    bool pass;
};

inline CorollaryReport corollary_certificate(const LatticeVec& a, const WeightConfig& cfg,
                                             const Window& w,
                                             ClosureMode mode = ClosureMode::Translators) {
    const auto id = WeylElem::identity(3);
    if (!s_omega_contains(id, a) || a.coords[0] >= a.coords[1] || a.coords[1] >= -1)
        throw std::domain_error(
            "corollary_certificate: need a in S_Id with a1 < a2 and a2 < -1");
    const int B = w.bound;
    const int saturation = 4 * B + 2;
    SpanBasis m = span_closure({ModuleVector::unit(BasisFunction(id, a))}, cfg, w, saturation, mode);

    SpanBasis mpp(w, cfg.p);
    for (int x = -B; x <= a.coords[1] + 1; ++x)
        mpp.insert(ModuleVector::unit(BasisFunction(id, LatticeVec(x, a.coords[1] + 1))));

    SpanBasis join = m;
    for (const auto& row : mpp.rows) join.insert(row);
    const int dim_inter = m.dim() + mpp.dim() - join.dim();

    CorollaryReport rep{a,
                        cfg.cse,
                        cfg.c_map.empty() ? 0 : cfg.c_map.begin()->second,
                        cfg.p,
                        B,
                        m.dim(),
                        mpp.dim(),
                        dim_inter,
                        false};
    rep.pass = dim_inter == 0 && mpp.dim() == B + a.coords[1] + 2;
    return rep;
}

}  // namespace heckemod
