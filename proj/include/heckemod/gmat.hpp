#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "heckemod/lattice.hpp"
#include "heckemod/laurent.hpp"
#include "heckemod/weyl.hpp"

namespace heckemod {

/// 3x3 matrix over F_q((t)). All group computations of the brute-force
/// oracle run at N = 3.
struct GMat {
    uint32_t q;
    std::array<TruncSeries, 9> e;

    explicit GMat(uint32_t field_order) : q(field_order) {
        for (auto& x : e) x = TruncSeries::zero(q);
    }

    TruncSeries& at(int i, int j) { return e[static_cast<size_t>((i - 1) * 3 + (j - 1))]; }
    const TruncSeries& at(int i, int j) const {
        return e[static_cast<size_t>((i - 1) * 3 + (j - 1))];
    }

    static GMat identity(uint32_t q) {
        GMat m(q);
        for (int i = 1; i <= 3; ++i) m.at(i, i) = TruncSeries::one(q);
        return m;
    }

    /// t_a = diag(t^{a_1}, t^{a_2}, 1).
    static GMat diag_t(uint32_t q, const LatticeVec& a) {
        if (a.rank() != 3) throw std::invalid_argument("GMat::diag_t: rank must be 3");
        GMat m(q);
        for (int i = 1; i <= 3; ++i) m.at(i, i) = TruncSeries::monomial(q, 1, a.at(i));
        return m;
    }

    /// Scalar matrix t^l (a central element).
    static GMat central_t(uint32_t q, int32_t l) {
        GMat m(q);
        for (int i = 1; i <= 3; ++i) m.at(i, i) = TruncSeries::monomial(q, 1, l);
        return m;
    }

    static GMat permutation(uint32_t q, const WeylElem& w) {
        if (w.rank() != 3) throw std::invalid_argument("GMat::permutation: rank must be 3");
        GMat m(q);
        for (int i = 1; i <= 3; ++i) m.at(i, w.image(i - 1) + 1) = TruncSeries::one(q);
        return m;
    }

    /// 1 + c E_{ij} (i != j, 1-based).
    static GMat elementary(uint32_t q, int i, int j, const TruncSeries& c) {
        if (i == j) throw std::invalid_argument("GMat::elementary: need i != j");
        GMat m = identity(q);
        m.at(i, j) = c;
        return m;
    }

    /// gamma = omega2 * diag(t, 1, 1), a generator of the normalizer of I_1.
    static GMat gamma(uint32_t q) {
        return permutation(q, WeylElem::omega2(3)) * diag_t(q, LatticeVec(1, 0));
    }

    static GMat gamma_inverse(uint32_t q) {
        return diag_t(q, LatticeVec(-1, 0)) * permutation(q, WeylElem::omega2(3).inverse());
    }

    friend GMat operator*(const GMat& a, const GMat& b) {
        if (a.q != b.q) throw std::invalid_argument("GMat: field mismatch");
        GMat r(a.q);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                TruncSeries acc = TruncSeries::zero(a.q);
                for (int k = 1; k <= 3; ++k) acc = acc + a.at(i, k) * b.at(k, j);
                r.at(i, j) = acc;
            }
        return r;
    }

    TruncSeries det() const {
        auto m = [&](int i, int j) { return at(i, j); };
        return m(1, 1) * (m(2, 2) * m(3, 3) - m(2, 3) * m(3, 2)) -
               m(1, 2) * (m(2, 1) * m(3, 3) - m(2, 3) * m(3, 1)) +
               m(1, 3) * (m(2, 1) * m(3, 2) - m(2, 2) * m(3, 1));
    }

    /// Adjugate-based inverse; rel_cap bounds the relative precision used
    /// for inverting the determinant.
    GMat inverse(int32_t rel_cap) const {
        const TruncSeries dinv = det().inverse(rel_cap);
        GMat r(q);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                const int i1 = i % 3 + 1, i2 = (i + 1) % 3 + 1;
                const int j1 = j % 3 + 1, j2 = (j + 1) % 3 + 1;
                // Cofactor expansion written cyclically avoids sign bookkeeping.
                r.at(j, i) = (at(i1, j1) * at(i2, j2) - at(i1, j2) * at(i2, j1)) * dinv;
            }
        return r;
    }

    std::string str() const {
        std::string s;
        for (int i = 1; i <= 3; ++i) {
            s += i == 1 ? "[" : " ";
            for (int j = 1; j <= 3; ++j) {
                s += at(i, j).str();
                s += j == 3 ? (i == 3 ? "]" : ";\n") : ", ";
            }
        }
        return s;
    }
};

/// K = GL_3(o): integral entries with unit determinant.
inline bool in_K(const GMat& g) {
    for (const auto& x : g.e)
        if (!x.val_at_least(0)) return false;
    return g.det().is_unit();
}

/// K_1 = 1 + t M_3(o).
inline bool in_K1(const GMat& g) {
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const TruncSeries d =
                i == j ? g.at(i, j) - TruncSeries::one(g.q) : g.at(i, j);
            if (!d.val_at_least(1)) return false;
        }
    return true;
}

/// I: integral, diagonal units, below-diagonal entries in (t).
inline bool in_I(const GMat& g) {
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) {
                if (!g.at(i, j).is_unit()) return false;
            } else if (!g.at(i, j).val_at_least(i > j ? 1 : 0)) {
                return false;
            }
        }
    return true;
}

/// I_1: reduction mod t is upper-triangular unipotent.
inline bool in_I1(const GMat& g) {
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) {
                if (!(g.at(i, j) - TruncSeries::one(g.q)).val_at_least(1)) return false;
            } else if (!g.at(i, j).val_at_least(i > j ? 1 : 0)) {
                return false;
            }
        }
    return true;
}

/// B cap K at working depth d: upper triangular with unit diagonal, the
/// below-diagonal entries vanishing to depth d.
inline bool in_BK(const GMat& g, int32_t depth) {
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) {
                if (!g.at(i, j).is_unit()) return false;
            } else if (!g.at(i, j).val_at_least(i > j ? depth : 0)) {
                return false;
            }
        }
    return true;
}

/// A named subgroup at a working depth, for membership dispatch.
struct SubgroupSpec {
    enum class Tag { K, K1, I, I1, BK };
    Tag tag;
    int32_t depth;

    SubgroupSpec(Tag t, int32_t d) : tag(t), depth(d) {}
};

/// Smallest entry valuation, certified: raises PrecisionError when an
/// undetermined entry could fall below the known minimum.
inline int32_t min_entry_val(const GMat& g) {
    int32_t best = TruncSeries::kInfPrec;
    bool have = false;
    for (const auto& x : g.e)
        if (x.known_nonzero()) {
            best = std::min(best, x.exact_val());
            have = true;
        }
    if (!have) throw PrecisionError("min_entry_val: all entries undetermined");
    for (const auto& x : g.e)
        if (!x.known_nonzero() && !x.is_exact() && x.prec < best)
            throw PrecisionError("min_entry_val: undetermined entry below known minimum");
    return best;
}

/// KZ: a unit scalar times a power of t times an element of K, i.e. the
/// determinant valuation is exactly three times the minimal entry valuation.
inline bool in_KZ(const GMat& g) {
    const int32_t v = min_entry_val(g);
    const TruncSeries d = g.det();
    if (d.known_nonzero()) return d.exact_val() == 3 * v;
    if (d.prec > 3 * v) return false;  // det valuation >= prec > 3v
    throw PrecisionError("in_KZ: determinant valuation undecided");
}

/// IZ = union over l of t^l I.
inline bool in_IZ(const GMat& g) {
    const int32_t v = min_entry_val(g);
    return in_I(GMat::central_t(g.q, -v) * g);
}

inline bool in_subgroup(const SubgroupSpec& s, const GMat& g) {
    switch (s.tag) {
        case SubgroupSpec::Tag::K: return in_K(g);
        case SubgroupSpec::Tag::K1: return in_K1(g);
        case SubgroupSpec::Tag::I: return in_I(g);
        case SubgroupSpec::Tag::I1: return in_I1(g);
        case SubgroupSpec::Tag::BK: return in_BK(g, s.depth);
    }
    throw std::logic_error("in_subgroup: bad tag");
}

}  // namespace heckemod
