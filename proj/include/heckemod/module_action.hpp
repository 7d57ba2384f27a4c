#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckemod/fp.hpp"
#include "heckemod/lattice.hpp"
#include "heckemod/presentation.hpp"
#include "heckemod/weyl.hpp"

namespace heckemod {

/// A basis function f_{w,a} of the pro-p-Iwahori invariants: the invariant
/// function supported on KZ t_a I_1 with value v_0 at w t_a. Valid keys
/// require a in S_w.
struct BasisFunction {
    WeylElem omega;
    LatticeVec a;

    BasisFunction(WeylElem w, LatticeVec v) : omega(std::move(w)), a(std::move(v)) {
        if (omega.rank() != a.rank())
            throw std::invalid_argument("BasisFunction: rank mismatch");
        if (!s_omega_contains(omega, a))
            throw std::invalid_argument("BasisFunction: a must lie in S_omega (got omega=" +
                                        omega.one_line() + ", a=" + a.str() + ")");
    }

    /// Canonical ordering: (one-line permutation, a_1, a_2, ...).
    bool operator<(const BasisFunction& o) const {
        if (omega != o.omega) return omega < o.omega;
        return a < o.a;
    }
    bool operator==(const BasisFunction& o) const { return omega == o.omega && a == o.a; }

    std::string str() const { return "f[" + omega.one_line() + ";" + a.str() + "]"; }
};

/// Sparse F_p-linear combination of basis functions. Zero coefficients are
/// never stored; the modulus p accompanies every mutation.
struct ModuleVector {
    std::map<BasisFunction, uint32_t> terms;

    bool is_zero() const { return terms.empty(); }

    static ModuleVector unit(const BasisFunction& f) {
        ModuleVector v;
        v.terms.emplace(f, 1);
        return v;
    }

    void add_term(const BasisFunction& f, int64_t coeff, const PrimeField& fp) {
        const uint32_t c = fp.reduce(coeff);
        if (c == 0) return;
        auto it = terms.find(f);
        if (it == terms.end()) {
            terms.emplace(f, c);
        } else {
            it->second = fp.add(it->second, c);
            if (it->second == 0) terms.erase(it);
        }
    }

    void add_scaled(const ModuleVector& o, uint32_t scale, const PrimeField& fp) {
        for (const auto& [k, c] : o.terms)
            add_term(k, static_cast<int64_t>(fp.mul(c, scale)), fp);
    }

    bool operator==(const ModuleVector& o) const { return terms == o.terms; }

    /// Canonical text form: terms in key order, coefficients in {1..p-1}.
    std::string str() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms) {
            if (!first) os << " + ";
            first = false;
            os << c << "*" << k.str();
        }
        return os.str();
    }
};

/// Per-run weight data: the character case, the coefficient prime, and the
/// scalars c by which T_{w1} acts on the a_1 = a_2 wall. Only 0 and -1 can
/// occur; the relevant Weyl elements are Id and w2^2 (Iwahori) or Id alone
/// (semi-regular).
struct WeightConfig {
    CharacterCase cse;
    uint32_t p;
    std::map<WeylElem, int> c_map;

    WeightConfig(CharacterCase c, uint32_t prime, int c_value = 0)
        : cse(c), p(prime) {
        if (c_value != 0 && c_value != -1)
            throw std::invalid_argument("WeightConfig: c must be 0 or -1");
        const auto id = WeylElem::identity(3);
        if (c == CharacterCase::Iwahori) {
            c_map.emplace(id, c_value);
            c_map.emplace(WeylElem::omega2(3) * WeylElem::omega2(3), c_value);
        } else if (c == CharacterCase::SemiRegular) {
            c_map.emplace(id, c_value);
        }
    }

    /// Overrides one wall scalar; the element must already be a wall case
    /// (the a_1 = a_2 branch only ever sees Id and w2^2).
    void set_wall_scalar(const WeylElem& w, int c_value) {
        if (c_value != 0 && c_value != -1)
            throw std::invalid_argument("WeightConfig: c must be 0 or -1");
        auto it = c_map.find(w);
        if (it == c_map.end())
            throw std::domain_error("WeightConfig: omega=" + w.one_line() +
                                    " has no wall scalar in this case");
        it->second = c_value;
    }

    int c_for(const WeylElem& w) const {
        auto it = c_map.find(w);
        if (it == c_map.end())
            throw std::domain_error("WeightConfig: no wall scalar configured for omega=" +
                                    w.one_line());
        return it->second;
    }
};

namespace detail {

inline void require_rank3(const BasisFunction& f) {
    if (f.omega.rank() != 3)
        throw std::domain_error("module action: only N = 3 is supported");
}

/// A generator sends a basis function to scalar * basis function (scalar may
/// be 0). All closed-form actions below are monomial in this sense.
struct MonomialImage {
    int scalar;  // integer scalar, reduced mod p by callers
    std::optional<BasisFunction> target;
};

}  // namespace detail

/// Left translation by gamma: gamma . f_{w,a} = f_{w w2^{-1}, a^gamma} with
/// a^gamma = (1 + a2 - a1, 1 - a1) for N = 3. A group action, defined in
/// every case.
inline BasisFunction act_gamma_left(const BasisFunction& f) {
    detail::require_rank3(f);
    const int a1 = f.a.coords[0], a2 = f.a.coords[1];
    return BasisFunction(f.omega * WeylElem::omega2(3).inverse(),
                         LatticeVec(1 + a2 - a1, 1 - a1));
}

namespace detail {

inline MonomialImage gamma_image(const BasisFunction& f) {
    require_rank3(f);
    const int a1 = f.a.coords[0], a2 = f.a.coords[1];
    return {1, BasisFunction(f.omega * WeylElem::omega2(3),
                             LatticeVec(1 - a2, a1 - a2))};
}

inline MonomialImage omega1_image(const BasisFunction& f, const WeightConfig& cfg) {
    require_rank3(f);
    const int a1 = f.a.coords[0], a2 = f.a.coords[1];
    if (a1 > a2)
        return {1, BasisFunction(f.omega * WeylElem::omega1(3), LatticeVec(a2, a1))};
    if (a1 == a2) {
        const int c = cfg.c_for(f.omega);
        if (c == 0) return {0, std::nullopt};
        return {c, f};
    }
    return {-1, f};
}

inline MonomialImage omega1_t0m1_image(const BasisFunction& f) {
    require_rank3(f);
    const int a1 = f.a.coords[0], a2 = f.a.coords[1];
    const LatticeVec out(a2, a1 - 1);
    // The target Weyl component is whichever of Id, w1 admits the shifted
    // point; it provably alternates between the two on this domain.
    const auto id = WeylElem::identity(3);
    const auto w1 = WeylElem::omega1(3);
    const bool in_id = s_omega_contains(id, out);
    const bool in_w1 = s_omega_contains(w1, out);
    if (in_id == in_w1)
        throw std::logic_error("T_{w1 t_(0,-1)}: target Weyl component not unique at " +
                               out.str());
    return {1, BasisFunction(in_id ? id : w1, out)};
}

inline MonomialImage regular_image(Generator g, const BasisFunction& f) {
    require_rank3(f);
    const int a1 = f.a.coords[0], a2 = f.a.coords[1];
    switch (g) {
        case Generator::Ttm10:
            return {1, BasisFunction(f.omega, LatticeVec(a1 - 1, a2))};
        case Generator::Ttm1m1:
            return {1, BasisFunction(f.omega, LatticeVec(a1 - 1, a2 - 1))};
        case Generator::Tt10:
        case Generator::Tt01:
        case Generator::Tt0m1:
        case Generator::Tt11:
            return {0, std::nullopt};
        default:
            throw std::logic_error("regular_image: not a regular generator");
    }
}

inline MonomialImage generator_image(Generator g, const BasisFunction& f,
                                     const WeightConfig& cfg) {
    switch (g) {
        case Generator::TGamma:
            if (cfg.cse != CharacterCase::Iwahori)
                throw std::domain_error("T_gamma is defined only in the Iwahori case");
            return gamma_image(f);
        case Generator::TOmega1:
            if (cfg.cse == CharacterCase::Regular)
                throw std::domain_error("T_omega1 is undefined in the regular case");
            return omega1_image(f, cfg);
        case Generator::TOmega1T10:
            if (cfg.cse != CharacterCase::SemiRegular)
                throw std::domain_error("T_{w1 t_(1,0)} is defined only in the semi-regular case");
            return {0, std::nullopt};
        case Generator::TOmega1T0m1:
            if (cfg.cse != CharacterCase::SemiRegular)
                throw std::domain_error("T_{w1 t_(0,-1)} is defined only in the semi-regular case");
            return omega1_t0m1_image(f);
        default:
            if (cfg.cse != CharacterCase::Regular)
                throw std::domain_error("translation generators are defined only in the regular case");
            return regular_image(g, f);
    }
}

}  // namespace detail

/// Right action of one generator, extended linearly.
inline ModuleVector act_generator(Generator g, const ModuleVector& v, const WeightConfig& cfg) {
    PrimeField fp(cfg.p);
    ModuleVector out;
    for (const auto& [key, coeff] : v.terms) {
        const auto img = detail::generator_image(g, key, cfg);
        if (img.scalar == 0) continue;
        out.add_term(*img.target, static_cast<int64_t>(coeff) * img.scalar, fp);
    }
    return out;
}

/// f | T_gamma = f_{w w2, gamma.a}, gamma.a = (1 - a2, a1 - a2). Iwahori only.
inline ModuleVector act_T_gamma(const ModuleVector& v, const WeightConfig& cfg) {
    return act_generator(Generator::TGamma, v, cfg);
}

/// f | T_{w1}: swap branch for a1 > a2, wall scalar c for a1 = a2, and -1
/// for a1 < a2. Iwahori and semi-regular.
inline ModuleVector act_T_omega1(const ModuleVector& v, const WeightConfig& cfg) {
    return act_generator(Generator::TOmega1, v, cfg);
}

/// f | T_{w1 t_(0,-1)}: (a1, a2) -> (a2, a1 - 1), flipping Id <-> w1.
inline ModuleVector act_T_omega1_t01m(const ModuleVector& v, const WeightConfig& cfg) {
    return act_generator(Generator::TOmega1T0m1, v, cfg);
}

/// f | T_{w1 t_(1,0)} = 0 on the whole space.
inline ModuleVector act_T_omega1_t10(const ModuleVector& v, const WeightConfig& cfg) {
    return act_generator(Generator::TOmega1T10, v, cfg);
}

inline ModuleVector act_regular_generator(Generator g, const ModuleVector& v,
                                          const WeightConfig& cfg) {
    return act_generator(g, v, cfg);
}

/// Folds the word's letters left to right over the vector.
inline ModuleVector act_word(const OperatorWord& w, const ModuleVector& v,
                             const WeightConfig& cfg) {
    if (w.cse != cfg.cse)
        throw std::invalid_argument("act_word: word case does not match configuration");
    ModuleVector cur = v;
    for (Generator g : w.letters) {
        if (cur.is_zero()) break;
        cur = act_generator(g, cur, cfg);
    }
    return cur;
}

/// Right action of a full Hecke element (sum of coefficient * word actions).
inline ModuleVector act_element(const HeckeElement& e, const ModuleVector& v,
                                const WeightConfig& cfg) {
    if (e.cse != cfg.cse || e.p != cfg.p)
        throw std::invalid_argument("act_element: case or modulus mismatch");
    PrimeField fp(cfg.p);
    ModuleVector out;
    for (const auto& [word, coeff] : e.terms) {
        ModuleVector part = act_word(OperatorWord(e.cse, word), v, cfg);
        out.add_scaled(part, coeff, fp);
    }
    return out;
}

/// Every basis key of the case's isotypic space with coordinates in the
/// window: all of (classify(a), a) for the Iwahori case, the S_Id and S_w1
/// keys for the semi-regular case, and the S_Id keys for the regular case.
inline std::vector<BasisFunction> window_basis(CharacterCase cse, const Window& w) {
    const auto id = WeylElem::identity(3);
    const auto w1 = WeylElem::omega1(3);
    std::vector<BasisFunction> out;
    for (const auto& a : w.points(3)) {
        switch (cse) {
            case CharacterCase::Iwahori:
                out.emplace_back(classify(a), a);
                break;
            case CharacterCase::SemiRegular:
                if (s_omega_contains(id, a))
                    out.emplace_back(id, a);
                else if (s_omega_contains(w1, a))
                    out.emplace_back(w1, a);
                break;
            case CharacterCase::Regular:
                if (s_omega_contains(id, a)) out.emplace_back(id, a);
                break;
        }
    }
    return out;
}

/// The two Iwahori-case composite words realizing translations on each of
/// the six regions S_w, together with the translation they effect there.
inline std::vector<std::pair<OperatorWord, LatticeVec>> composite_table(const WeylElem& region) {
    using G = Generator;
    const auto cse = CharacterCase::Iwahori;
    auto word = [&](std::vector<G> half) {
        OperatorWord w(cse, half);
        return w.repeated(2);  // every listed operator is (half)^2
    };
    const auto id = WeylElem::identity(3);
    const auto w1 = WeylElem::omega1(3);
    const auto w2 = WeylElem::omega2(3);

    if (region == id)
        return {{word({G::TGamma, G::TOmega1}), LatticeVec(-1, 0)},
                {word({G::TGamma, G::TOmega1, G::TGamma}), LatticeVec(-1, -1)}};
    if (region == w1)
        return {{word({G::TOmega1, G::TGamma}), LatticeVec(0, -1)},
                {word({G::TGamma, G::TOmega1, G::TGamma}), LatticeVec(-1, -1)}};
    if (region == w1 * w2)
        return {{word({G::TOmega1, G::TGamma, G::TGamma}), LatticeVec(1, 0)},
                {word({G::TGamma, G::TGamma, G::TOmega1, G::TGamma, G::TGamma}), LatticeVec(1, 1)}};
    if (region == w2 * w1)
        return {{word({G::TGamma, G::TOmega1}), LatticeVec(-1, 0)},
                {word({G::TGamma, G::TGamma, G::TOmega1}), LatticeVec(0, 1)}};
    if (region == w2)
        return {{word({G::TOmega1, G::TGamma, G::TGamma}), LatticeVec(1, 0)},
                {word({G::TOmega1, G::TGamma}), LatticeVec(0, -1)}};
    if (region == w2 * w2)
        return {{word({G::TGamma, G::TGamma, G::TOmega1}), LatticeVec(0, 1)},
                {word({G::TGamma, G::TGamma, G::TOmega1, G::TGamma, G::TGamma}), LatticeVec(1, 1)}};
    throw std::invalid_argument("composite_table: unknown region " + region.one_line());
}

}  // namespace heckemod
