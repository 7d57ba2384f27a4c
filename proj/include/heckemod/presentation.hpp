#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckemod/fp.hpp"
#include "heckemod/weyl.hpp"

namespace heckemod {

/// The three shapes of the algebra H(IZ, chi), distinguished by the
/// stabilizer W(chi) of the character chi under the Weyl action:
/// the whole group, the order-2 subgroup {Id, w1}, or trivial.
enum class CharacterCase { Iwahori, SemiRegular, Regular };

inline std::string case_name(CharacterCase c) {
    switch (c) {
        case CharacterCase::Iwahori: return "iwahori";
        case CharacterCase::SemiRegular: return "semiregular";
        case CharacterCase::Regular: return "regular";
    }
    throw std::logic_error("case_name: bad case");
}

inline CharacterCase case_from_name(const std::string& s) {
    if (s == "iwahori") return CharacterCase::Iwahori;
    if (s == "semiregular") return CharacterCase::SemiRegular;
    if (s == "regular") return CharacterCase::Regular;
    throw std::invalid_argument("unknown character case: " + s);
}

/// W(chi) for N = 3.
inline std::vector<WeylElem> stabilizer_group(CharacterCase c) {
    const auto id = WeylElem::identity(3);
    switch (c) {
        case CharacterCase::Iwahori: return WeylElem::full_group(3);
        case CharacterCase::SemiRegular: return {id, WeylElem::omega1(3)};
        case CharacterCase::Regular: return {id};
    }
    throw std::logic_error("stabilizer_group: bad case");
}

/// A generator T_{w t_a} may only be formed when chi = chi^w.
inline bool generator_defined(CharacterCase c, const WeylElem& w) {
    for (const auto& u : stabilizer_group(c))
        if (u == w) return true;
    return false;
}

/// The union of the three generator alphabets. Names encode the supporting
/// double coset: TOmega1T0m1 is T_{w1 t_(0,-1)}, Ttm1m1 is T_{t_(-1,-1)}.
enum class Generator : uint8_t {
    TGamma,
    TOmega1,
    TOmega1T10,
    TOmega1T0m1,
    Tt10,
    Ttm10,
    Tt01,
    Tt0m1,
    Tt11,
    Ttm1m1,
};

inline std::string generator_name(Generator g) {
    switch (g) {
        case Generator::TGamma: return "Tgamma";
        case Generator::TOmega1: return "Tomega1";
        case Generator::TOmega1T10: return "Tomega1_t10";
        case Generator::TOmega1T0m1: return "Tomega1_t0m1";
        case Generator::Tt10: return "Tt10";
        case Generator::Ttm10: return "Ttm10";
        case Generator::Tt01: return "Tt01";
        case Generator::Tt0m1: return "Tt0m1";
        case Generator::Tt11: return "Tt11";
        case Generator::Ttm1m1: return "Ttm1m1";
    }
    throw std::logic_error("generator_name: bad generator");
}

inline Generator generator_from_name(const std::string& s) {
    static const std::vector<Generator> all = {
        Generator::TGamma, Generator::TOmega1,  Generator::TOmega1T10,
        Generator::TOmega1T0m1, Generator::Tt10, Generator::Ttm10,
        Generator::Tt01, Generator::Tt0m1, Generator::Tt11, Generator::Ttm1m1};
    for (Generator g : all)
        if (generator_name(g) == s) return g;
    throw std::invalid_argument("unknown generator: " + s);
}

inline std::vector<Generator> alphabet(CharacterCase c) {
    switch (c) {
        case CharacterCase::Iwahori:
            return {Generator::TGamma, Generator::TOmega1};
        case CharacterCase::SemiRegular:
            return {Generator::TOmega1, Generator::TOmega1T10, Generator::TOmega1T0m1};
        case CharacterCase::Regular:
            return {Generator::Tt10, Generator::Ttm10, Generator::Tt01,
                    Generator::Tt0m1, Generator::Tt11, Generator::Ttm1m1};
    }
    throw std::logic_error("alphabet: bad case");
}

inline bool in_alphabet(CharacterCase c, Generator g) {
    const auto a = alphabet(c);
    return std::find(a.begin(), a.end(), g) != a.end();
}

/// The T_{w t_a} basis of the algebra restricted to a coordinate box: all
/// pairs with w in W(chi), ordered by (w, a).
inline std::vector<std::pair<WeylElem, std::vector<int>>> hecke_basis_window(CharacterCase c,
                                                                             int bound) {
    std::vector<std::pair<WeylElem, std::vector<int>>> out;
    for (const auto& w : stabilizer_group(c))
        for (int a1 = -bound; a1 <= bound; ++a1)
            for (int a2 = -bound; a2 <= bound; ++a2)
                out.emplace_back(w, std::vector<int>{a1, a2});
    std::sort(out.begin(), out.end());
    return out;
}

/// A word in the generators of one case, acting by sequential right action:
/// the leftmost letter acts first, matching v | (S T) = (v | S) | T.
struct OperatorWord {
    CharacterCase cse;
    std::vector<Generator> letters;

    OperatorWord(CharacterCase c, std::vector<Generator> ls)
        : cse(c), letters(std::move(ls)) {
        for (Generator g : letters)
            if (!in_alphabet(cse, g))
                throw std::invalid_argument("OperatorWord: letter outside case alphabet");
    }

    static OperatorWord empty(CharacterCase c) { return OperatorWord(c, {}); }

    size_t size() const { return letters.size(); }

    OperatorWord& append(const OperatorWord& w) {
        if (w.cse != cse) throw std::invalid_argument("OperatorWord: case mismatch");
        letters.insert(letters.end(), w.letters.begin(), w.letters.end());
        return *this;
    }

    OperatorWord repeated(int k) const {
        OperatorWord out = empty(cse);
        for (int i = 0; i < k; ++i) out.append(*this);
        return out;
    }

    bool operator==(const OperatorWord& o) const {
        return cse == o.cse && letters == o.letters;
    }
    bool operator<(const OperatorWord& o) const {
        if (cse != o.cse) return cse < o.cse;
        return letters < o.letters;
    }

    std::string str() const {
        if (letters.empty()) return "1";
        std::string s;
        for (size_t i = 0; i < letters.size(); ++i) {
            if (i) s += ".";
            s += generator_name(letters[i]);
        }
        return s;
    }
};

/// One oriented rewrite rule: lhs -> sign * rhs, or lhs -> 0.
struct RewriteRule {
    std::vector<Generator> lhs;
    std::vector<Generator> rhs;
    int sign;       // +1 or -1, ignored when zero
    bool is_zero;

    static RewriteRule to_zero(std::vector<Generator> l) { return {std::move(l), {}, 1, true}; }
    static RewriteRule to(std::vector<Generator> l, std::vector<Generator> r, int s) {
        return {std::move(l), std::move(r), s, false};
    }
};

/// The defining relations of each presentation, oriented as reductions.
/// Iwahori (N=3): Tgamma^3 -> 1 and Tomega1^2 -> -Tomega1.
/// Semi-regular: Tomega1^2 -> -Tomega1 and the two zero products of
/// T_{w1 t_(1,0)} against T_{w1 t_(0,-1)}.
/// Regular: the nine vanishing pairwise products; the algebra is
/// commutative, which normalization applies by sorting letters.
inline std::vector<RewriteRule> relations(CharacterCase c) {
    using G = Generator;
    switch (c) {
        case CharacterCase::Iwahori:
            return {
                RewriteRule::to({G::TGamma, G::TGamma, G::TGamma}, {}, +1),
                RewriteRule::to({G::TOmega1, G::TOmega1}, {G::TOmega1}, -1),
            };
        case CharacterCase::SemiRegular:
            return {
                RewriteRule::to({G::TOmega1, G::TOmega1}, {G::TOmega1}, -1),
                RewriteRule::to_zero({G::TOmega1T10, G::TOmega1T0m1}),
                RewriteRule::to_zero({G::TOmega1T0m1, G::TOmega1T10}),
            };
        case CharacterCase::Regular:
            return {
                RewriteRule::to_zero({G::Tt10, G::Ttm10}),
                RewriteRule::to_zero({G::Tt10, G::Tt01}),
                RewriteRule::to_zero({G::Tt10, G::Ttm1m1}),
                RewriteRule::to_zero({G::Tt01, G::Tt0m1}),
                RewriteRule::to_zero({G::Tt01, G::Ttm1m1}),
                RewriteRule::to_zero({G::Tt11, G::Ttm1m1}),
                RewriteRule::to_zero({G::Tt11, G::Tt0m1}),
                RewriteRule::to_zero({G::Tt11, G::Ttm10}),
                RewriteRule::to_zero({G::Ttm10, G::Tt0m1}),
            };
    }
    throw std::logic_error("relations: bad case");
}

inline bool case_is_commutative(CharacterCase c) { return c == CharacterCase::Regular; }

/// Rewrites one word to its normal form. Returns (sign, word); is_zero set
/// when a zero rule (or forbidden regular pair) fires. Termination: every
/// non-zero rule strictly shortens the word.
struct RewrittenWord {
    int sign = 1;
    bool is_zero = false;
    std::vector<Generator> letters;
};

inline RewrittenWord rewrite_word(const OperatorWord& w) {
    RewrittenWord out;
    out.letters = w.letters;
    if (case_is_commutative(w.cse)) {
        // Commutative: a forbidden pair anywhere in the multiset kills the word.
        for (const auto& rule : relations(w.cse)) {
            const Generator x = rule.lhs[0], y = rule.lhs[1];
            bool has_x = std::find(out.letters.begin(), out.letters.end(), x) != out.letters.end();
            bool has_y = std::find(out.letters.begin(), out.letters.end(), y) != out.letters.end();
            if (has_x && has_y) {
                out.is_zero = true;
                return out;
            }
        }
        std::sort(out.letters.begin(), out.letters.end());
        return out;
    }
    const auto rules = relations(w.cse);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t pos = 0; pos < out.letters.size() && !changed; ++pos) {
            for (const auto& rule : rules) {
                const size_t len = rule.lhs.size();
                if (pos + len > out.letters.size()) continue;
                if (!std::equal(rule.lhs.begin(), rule.lhs.end(), out.letters.begin() + pos))
                    continue;
                if (rule.is_zero) {
                    out.is_zero = true;
                    return out;
                }
                std::vector<Generator> next(out.letters.begin(), out.letters.begin() + pos);
                next.insert(next.end(), rule.rhs.begin(), rule.rhs.end());
                next.insert(next.end(), out.letters.begin() + pos + len, out.letters.end());
                out.letters = std::move(next);
                out.sign *= rule.sign;
                changed = true;
                break;
            }
        }
    }
    return out;
}

/// A finite F_p-linear combination of normal-form operator words.
struct HeckeElement {
    CharacterCase cse;
    uint32_t p;
    std::map<std::vector<Generator>, uint32_t> terms;  // coeffs in 1..p-1

    HeckeElement(CharacterCase c, uint32_t prime) : cse(c), p(prime) {}

    bool is_zero() const { return terms.empty(); }

    void add_term(const std::vector<Generator>& word, int64_t coeff) {
        PrimeField f(p);
        const uint32_t c = f.reduce(coeff);
        if (c == 0) return;
        auto it = terms.find(word);
        if (it == terms.end()) {
            terms.emplace(word, c);
        } else {
            it->second = f.add(it->second, c);
            if (it->second == 0) terms.erase(it);
        }
    }

    bool operator==(const HeckeElement& o) const {
        return cse == o.cse && p == o.p && terms == o.terms;
    }
};

/// Applies the case's rules to every word until fixpoint and combines
/// coefficients. Keys of the result are in normal form.
inline HeckeElement normalize(const HeckeElement& e) {
    HeckeElement out(e.cse, e.p);
    for (const auto& [word, coeff] : e.terms) {
        RewrittenWord r = rewrite_word(OperatorWord(e.cse, word));
        if (r.is_zero) continue;
        out.add_term(r.letters, static_cast<int64_t>(coeff) * r.sign);
    }
    return out;
}

}  // namespace heckemod
