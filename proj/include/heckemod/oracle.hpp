#pragma once

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heckemod/gmat.hpp"
#include "heckemod/lattice.hpp"
#include "heckemod/module_action.hpp"
#include "heckemod/weyl.hpp"

namespace heckemod {

/// Raised when a classification scan exhausts its search box.
struct BoundError : std::runtime_error {
    explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

/// Brute-force ground truth over F_q((t)) at working depth d: double-coset
/// classification by exhaustive coset enumeration, the definitional S_omega
/// test, and the Hecke action sum for the trivial weight.
struct Oracle {
    uint32_t q;
    int32_t depth;

    Oracle(uint32_t field_order, int32_t working_depth) : q(field_order), depth(working_depth) {
        if (!PrimeField::is_prime(q))
            throw std::invalid_argument("Oracle: residue order must be prime");
        if (depth < 2) throw std::invalid_argument("Oracle: depth too small");
    }

    /// Digit positions of one off-diagonal entry of a coset representative:
    /// exponents [lo, hi) at entry (i, j).
    struct RepRange {
        int i, j;
        int32_t lo, hi;
    };

    static int eps(int i, int j) { return i > j ? 1 : 0; }

    /// Ranges presenting (I_1 cap t_a^{-1} K t_a) \ I_1: at entry (i, j) the
    /// I_1-ideal is p^eps and the conjugate K-ideal is p^(a_j - a_i), so the
    /// quotient contributes digits at exponents [eps, max(eps, a_j - a_i)).
    /// The diagonal torus lies in both groups and contributes nothing.
    std::vector<RepRange> rep_ranges_KtI1(const LatticeVec& a) const {
        std::vector<RepRange> out;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                if (i == j) continue;
                const int32_t lo = eps(i, j);
                const int32_t hi = std::max<int32_t>(lo, a.at(j) - a.at(i));
                if (hi > lo) out.push_back({i, j, lo, hi});
            }
        return out;
    }

    /// Ranges presenting (I cap (w t_a)^{-1} I (w t_a)) \ I: the conjugate
    /// ideal at (r, s) is p^(eps(w^{-1}(r), w^{-1}(s)) + a_s - a_r).
    std::vector<RepRange> rep_ranges_ItI(const WeylElem& w, const LatticeVec& a) const {
        const WeylElem winv = w.inverse();
        std::vector<RepRange> out;
        for (int r = 1; r <= 3; ++r)
            for (int s = 1; s <= 3; ++s) {
                if (r == s) continue;
                const int32_t lo = eps(r, s);
                const int32_t conj =
                    eps(winv.image(r - 1) + 1, winv.image(s - 1) + 1) + a.at(s) - a.at(r);
                const int32_t hi = std::max(lo, conj);
                if (hi > lo) out.push_back({r, s, lo, hi});
            }
        return out;
    }

    /// Enumerates the representatives as ordered products of elementary
    /// matrices with the given digit expansions, visiting each one's exact
    /// inverse (reversed product of negated elementaries). Visiting stops
    /// early when the callback returns true; the overall result reports
    /// whether any callback did.
    bool for_each_rep_inv(const std::vector<RepRange>& ranges,
                          const std::function<bool(const GMat&)>& visit) const {
        int64_t total_digits = 0;
        for (const auto& r : ranges) total_digits += r.hi - r.lo;
        std::vector<uint32_t> digits(static_cast<size_t>(total_digits), 0);
        while (true) {
            GMat rep_inv = GMat::identity(q);
            size_t off = 0;
            for (const auto& r : ranges) {
                std::vector<uint32_t> ds(digits.begin() + static_cast<long>(off),
                                         digits.begin() + static_cast<long>(off) + (r.hi - r.lo));
                off += static_cast<size_t>(r.hi - r.lo);
                const TruncSeries entry = TruncSeries::from_digits(q, r.lo, ds);
                if (!entry.known_nonzero()) continue;
                rep_inv = GMat::elementary(q, r.i, r.j, -entry) * rep_inv;
            }
            if (visit(rep_inv)) return true;
            // Odometer step over all digit assignments.
            size_t k = 0;
            while (k < digits.size() && digits[k] == q - 1) digits[k++] = 0;
            if (k == digits.size()) return false;
            ++digits[k];
        }
    }

    /// Necessary condition for g in KZ t_a I_1, checked before the coset
    /// scan: writing g = z k t_a i with z = t^l, the minimal valuation of
    /// column j is exactly l plus that of column j of t_a i, which lies
    /// between min_r(a_r + eps(r, j)) and a_j (left multiplication by K
    /// preserves column minima, the diagonal of i is a unit). Requires every
    /// entry exact; returns true (no verdict) otherwise.
    bool column_filter_KZtI1(const GMat& g, const LatticeVec& a) const {
        const TruncSeries d = g.det();
        if (!d.known_nonzero()) return true;
        const int64_t shifted = static_cast<int64_t>(d.exact_val()) - a.at(1) - a.at(2);
        if (shifted % 3 != 0) return false;
        const int32_t l = static_cast<int32_t>(shifted / 3);
        for (int j = 1; j <= 3; ++j) {
            int32_t colmin = TruncSeries::kInfPrec;
            for (int i = 1; i <= 3; ++i) {
                const TruncSeries& x = g.at(i, j);
                if (x.known_nonzero())
                    colmin = std::min(colmin, x.val);
                else if (!x.is_exact_zero())
                    return true;  // undetermined entry: no cheap verdict
            }
            if (colmin >= TruncSeries::kInfPrec) return false;  // zero column
            int32_t lo = TruncSeries::kInfPrec;
            for (int r = 1; r <= 3; ++r) lo = std::min<int32_t>(lo, a.at(r) + eps(r, j));
            if (colmin - l < lo || colmin - l > a.at(j)) return false;
        }
        return true;
    }

    /// g in KZ t_a I_1, tested as: some representative r with
    /// g r^{-1} t_a^{-1} in KZ.
    bool member_KZtI1(const GMat& g, const LatticeVec& a) const {
        if (!column_filter_KZtI1(g, a)) return false;
        const GMat t_inv = GMat::diag_t(q, LatticeVec(-a.coords[0], -a.coords[1]));
        return for_each_rep_inv(rep_ranges_KtI1(a), [&](const GMat& rep_inv) {
            return in_KZ(g * rep_inv * t_inv);
        });
    }

    /// The unique a in the bound box with g in KZ t_a I_1. Scans the whole
    /// box so that a uniqueness failure (which would falsify the
    /// decomposition or this implementation) aborts loudly.
    LatticeVec classify_KZtI1(const GMat& g, int bound) const {
        const TruncSeries d = g.det();
        const bool have_det = d.known_nonzero();
        const int32_t det_val = have_det ? d.exact_val() : 0;
        std::vector<LatticeVec> hits;
        for (int a1 = -bound; a1 <= bound; ++a1)
            for (int a2 = -bound; a2 <= bound; ++a2) {
                // det(kz t_a i) has valuation 3l + a1 + a2, so mismatched
                // residues mod 3 cannot contain g.
                if (have_det && ((det_val - a1 - a2) % 3 + 3) % 3 != 0) continue;
                const LatticeVec a(a1, a2);
                if (member_KZtI1(g, a)) hits.push_back(a);
            }
        if (hits.empty())
            throw BoundError("classify_KZtI1: no coset found within bound " +
                             std::to_string(bound));
        if (hits.size() > 1)
            throw std::logic_error("classify_KZtI1: element in two cosets " + hits[0].str() +
                                   " and " + hits[1].str() + " (decomposition falsified)");
        return hits[0];
    }

    bool member_IZtI(const GMat& g, const WeylElem& w, const LatticeVec& a) const {
        const GMat h_inv =
            GMat::diag_t(q, LatticeVec(-a.coords[0], -a.coords[1])) * GMat::permutation(q, w.inverse());
        return for_each_rep_inv(rep_ranges_ItI(w, a), [&](const GMat& rep_inv) {
            return in_IZ(g * rep_inv * h_inv);
        });
    }

    std::pair<WeylElem, LatticeVec> classify_IZtI(const GMat& g, int bound) const {
        const TruncSeries d = g.det();
        const bool have_det = d.known_nonzero();
        const int32_t det_val = have_det ? d.exact_val() : 0;
        std::vector<std::pair<WeylElem, LatticeVec>> hits;
        for (const auto& w : WeylElem::full_group(3))
            for (int a1 = -bound; a1 <= bound; ++a1)
                for (int a2 = -bound; a2 <= bound; ++a2) {
                    if (have_det && ((det_val - a1 - a2) % 3 + 3) % 3 != 0) continue;
                    const LatticeVec a(a1, a2);
                    if (member_IZtI(g, w, a)) hits.emplace_back(w, a);
                }
        if (hits.empty())
            throw BoundError("classify_IZtI: no coset found within bound " +
                             std::to_string(bound));
        if (hits.size() > 1)
            throw std::logic_error("classify_IZtI: element in two cosets (decomposition falsified)");
        return hits[0];
    }

    /// Definitional test of a in S_w: conjugate the topological generators
    /// of I up to the working depth by w t_a; containment fails exactly when
    /// some conjugate lands in K but outside I. Diagonal generators
    /// conjugate to diagonal units and never witness a failure.
    bool s_omega_bruteforce(const WeylElem& w, const LatticeVec& a) const {
        int32_t amax = 0;
        for (int c : a.coords) amax = std::max<int32_t>(amax, std::abs(c));
        if (depth <= 2 * amax + 2)
            throw std::invalid_argument("s_omega_bruteforce: depth must exceed 2*max|a_i| + 2");
        const GMat h = GMat::permutation(q, w) * GMat::diag_t(q, a);
        const GMat h_inv =
            GMat::diag_t(q, LatticeVec(-a.coords[0], -a.coords[1])) * GMat::permutation(q, w.inverse());
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                if (i == j) continue;
                for (int32_t m = eps(i, j); m < depth; ++m) {
                    const GMat gen =
                        GMat::elementary(q, i, j, TruncSeries::monomial(q, 1, m));
                    const GMat x = h * gen * h_inv;
                    if (in_K(x) && !in_I(x)) return false;
                }
            }
        return true;
    }

    /// The right action sum f | T_g = sum over I_1/(I_1 cap g^{-1} I_1 g) of
    /// i g^{-1} . f, evaluated for the trivial weight by classifying the
    /// support of every translate. Coefficients land in F_p with p = q.
    /// Supported operators: g = omega1 (q-element transversal u(c)) and
    /// g = gamma (normalizes I_1, single term).
    ModuleVector hecke_action_bruteforce_trivial(Generator op, const BasisFunction& f,
                                                 int bound) const {
        std::vector<GMat> transversal;
        GMat g_inv = GMat::identity(q);
        if (op == Generator::TOmega1) {
            for (uint32_t c = 0; c < q; ++c)
                transversal.push_back(GMat::elementary(
                    q, 1, 2, TruncSeries::monomial(q, static_cast<int64_t>(c), 0)));
            g_inv = GMat::permutation(q, WeylElem::omega1(3));
        } else if (op == Generator::TGamma) {
            transversal.push_back(GMat::identity(q));
            g_inv = GMat::gamma_inverse(q);
        } else {
            throw std::invalid_argument("hecke_action_bruteforce_trivial: operator must be omega1 or gamma");
        }

        PrimeField fp(q);
        ModuleVector out;
        for (int b1 = -bound; b1 <= bound; ++b1)
            for (int b2 = -bound; b2 <= bound; ++b2) {
                const LatticeVec b(b1, b2);
                const GMat t_b = GMat::diag_t(q, b);
                uint32_t cnt = 0;
                for (const auto& rep : transversal)
                    if (member_KZtI1(t_b * rep * g_inv, f.a)) ++cnt;
                const uint32_t coeff = cnt % q;
                if (coeff == 0) continue;
                if (std::abs(b1) == bound || std::abs(b2) == bound)
                    throw BoundError("hecke_action_bruteforce_trivial: support reaches scan boundary");
                out.add_term(BasisFunction(classify(b), b), coeff, fp);
            }
        return out;
    }
};

}  // namespace heckemod
