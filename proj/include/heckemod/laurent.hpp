#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckemod/fp.hpp"

namespace heckemod {

/// Raised whenever a verdict would depend on digits beyond the guaranteed
/// precision. Verdicts are never guessed.
struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

/// An element of F_q((t)) known up to an absolute precision:
///
///     sum_k digits[k] * t^(val+k)  +  O(t^prec)
///
/// Invariants: digits are reduced mod q with nonzero first and last digit;
/// every stored exponent is < prec. An element with no digits is
/// indistinguishable from zero at its precision; prec == kInfPrec marks
/// exact values (all higher digits are exactly zero).
struct TruncSeries {
    static constexpr int32_t kInfPrec = 1 << 28;

    uint32_t q = 2;
    int32_t val = 0;
    std::vector<uint32_t> digits;
    int32_t prec = kInfPrec;

    TruncSeries() = default;

    static int32_t sat_add(int32_t a, int32_t b) {
        if (a >= kInfPrec || b >= kInfPrec) return kInfPrec;
        return a + b;
    }

    static TruncSeries zero(uint32_t q) {
        TruncSeries s;
        s.q = q;
        return s;
    }

    static TruncSeries zero_at(uint32_t q, int32_t m) {
        TruncSeries s;
        s.q = q;
        s.prec = m;
        return s;
    }

    /// c * t^k, exact.
    static TruncSeries monomial(uint32_t q, int64_t c, int32_t k) {
        TruncSeries s;
        s.q = q;
        const uint32_t d = PrimeField(q).reduce(c);
        if (d != 0) {
            s.val = k;
            s.digits = {d};
        }
        return s;
    }

    static TruncSeries one(uint32_t q) { return monomial(q, 1, 0); }

    static TruncSeries from_digits(uint32_t q, int32_t v, std::vector<uint32_t> ds,
                                   int32_t precision = kInfPrec) {
        TruncSeries s;
        s.q = q;
        s.val = v;
        s.digits = std::move(ds);
        s.prec = precision;
        s.normalize();
        return s;
    }

    bool known_nonzero() const { return !digits.empty(); }
    bool is_exact() const { return prec >= kInfPrec; }
    bool is_exact_zero() const { return digits.empty() && is_exact(); }

    /// Guaranteed lower bound on the true valuation.
    int32_t val_lower_bound() const { return digits.empty() ? prec : val; }

    /// Exact valuation; undecidable for zero-at-precision elements.
    int32_t exact_val() const {
        if (digits.empty()) {
            if (is_exact()) throw std::domain_error("exact_val: value is exactly zero");
            throw PrecisionError("exact_val: valuation unknown beyond O(t^" +
                                 std::to_string(prec) + ")");
        }
        return val;
    }

    /// Decides val >= k, or raises PrecisionError when the guaranteed digits
    /// cannot settle it.
    bool val_at_least(int32_t k) const {
        if (!digits.empty()) return val >= k;
        if (prec >= k) return true;
        throw PrecisionError("val_at_least: O(t^" + std::to_string(prec) +
                             ") cannot decide valuation >= " + std::to_string(k));
    }

    bool is_unit() const {
        if (!digits.empty()) return val == 0;
        if (prec >= 1) return false;
        throw PrecisionError("is_unit: precision too low");
    }

    /// True iff the element is zero up to t^m (inclusive lower bound on the
    /// error term), raising when the precision cannot certify it.
    bool is_zero_to(int32_t m) const {
        if (!digits.empty()) return false;
        if (prec >= m) return true;
        throw PrecisionError("is_zero_to: precision too low");
    }

    void normalize() {
        PrimeField f(q);
        for (auto& d : digits) d %= q;
        // Drop digits at or beyond the precision bound.
        if (!digits.empty() && prec < kInfPrec) {
            const int64_t keep = static_cast<int64_t>(prec) - val;
            if (keep <= 0)
                digits.clear();
            else if (static_cast<int64_t>(digits.size()) > keep)
                digits.resize(static_cast<size_t>(keep));
        }
        size_t lead = 0;
        while (lead < digits.size() && digits[lead] == 0) ++lead;
        if (lead) {
            digits.erase(digits.begin(), digits.begin() + lead);
            val += static_cast<int32_t>(lead);
        }
        while (!digits.empty() && digits.back() == 0) digits.pop_back();
        if (digits.empty()) val = 0;
    }

    uint32_t digit_at(int32_t e) const {
        if (digits.empty()) return 0;
        const int64_t idx = static_cast<int64_t>(e) - val;
        if (idx < 0 || idx >= static_cast<int64_t>(digits.size())) return 0;
        return digits[static_cast<size_t>(idx)];
    }

    TruncSeries operator-() const {
        TruncSeries r = *this;
        PrimeField f(q);
        for (auto& d : r.digits) d = f.neg(d);
        return r;
    }

    friend TruncSeries operator+(const TruncSeries& x, const TruncSeries& y) {
        if (x.q != y.q) throw std::invalid_argument("TruncSeries: field mismatch");
        TruncSeries r;
        r.q = x.q;
        r.prec = std::min(x.prec, y.prec);
        if (x.digits.empty() && y.digits.empty()) return r;
        const int32_t lo = std::min(x.val_lower_bound(), y.val_lower_bound());
        int32_t hi = lo;
        if (!x.digits.empty()) hi = std::max(hi, x.val + static_cast<int32_t>(x.digits.size()));
        if (!y.digits.empty()) hi = std::max(hi, y.val + static_cast<int32_t>(y.digits.size()));
        hi = std::min(hi, r.prec);
        PrimeField f(x.q);
        r.val = lo;
        r.digits.assign(static_cast<size_t>(std::max(0, hi - lo)), 0);
        for (int32_t e = lo; e < hi; ++e)
            r.digits[static_cast<size_t>(e - lo)] = f.add(x.digit_at(e), y.digit_at(e));
        r.normalize();
        return r;
    }

    friend TruncSeries operator-(const TruncSeries& x, const TruncSeries& y) { return x + (-y); }

    friend TruncSeries operator*(const TruncSeries& x, const TruncSeries& y) {
        if (x.q != y.q) throw std::invalid_argument("TruncSeries: field mismatch");
        TruncSeries r;
        r.q = x.q;
        // Error terms: poly_x * O(t^y.prec), poly_y * O(t^x.prec), O(x.prec + y.prec).
        const int32_t vx = x.digits.empty() ? kInfPrec : x.val;
        const int32_t vy = y.digits.empty() ? kInfPrec : y.val;
        r.prec = std::min({sat_add(vx, y.prec), sat_add(vy, x.prec), sat_add(x.prec, y.prec)});
        if (x.digits.empty() || y.digits.empty()) return r;
        r.val = x.val + y.val;
        r.digits.assign(x.digits.size() + y.digits.size() - 1, 0);
        PrimeField f(x.q);
        for (size_t i = 0; i < x.digits.size(); ++i) {
            if (x.digits[i] == 0) continue;
            for (size_t j = 0; j < y.digits.size(); ++j)
                r.digits[i + j] = f.add(r.digits[i + j], f.mul(x.digits[i], y.digits[j]));
        }
        r.normalize();
        return r;
    }

    /// Multiplicative inverse. The element must be known nonzero; rel_cap
    /// bounds the relative precision of the result when the input is exact
    /// but not a monomial (the inverse is then an infinite series).
    TruncSeries inverse(int32_t rel_cap) const {
        if (digits.empty())
            throw PrecisionError("inverse: element not known to be nonzero");
        PrimeField f(q);
        if (digits.size() == 1 && is_exact())
            return monomial(q, f.inv(digits[0]), -val);
        int32_t rel = is_exact() ? rel_cap : std::min<int32_t>(prec - val, rel_cap);
        if (rel <= 0) throw PrecisionError("inverse: no relative precision available");
        if (rel >= kInfPrec)
            throw PrecisionError("inverse: non-monomial inverse requires a finite precision cap");
        std::vector<uint32_t> inv(static_cast<size_t>(rel), 0);
        const uint32_t lead_inv = f.inv(digits[0]);
        inv[0] = lead_inv;
        for (int32_t k = 1; k < rel; ++k) {
            uint32_t acc = 0;
            for (int32_t j = 1; j <= k; ++j) {
                const uint32_t uj = static_cast<size_t>(j) < digits.size() ? digits[j] : 0;
                acc = f.add(acc, f.mul(uj, inv[static_cast<size_t>(k - j)]));
            }
            inv[static_cast<size_t>(k)] = f.neg(f.mul(lead_inv, acc));
        }
        return from_digits(q, -val, std::move(inv), -val + rel);
    }

    bool identical(const TruncSeries& o) const {
        return q == o.q && val == o.val && digits == o.digits && prec == o.prec;
    }

    std::string str() const {
        std::ostringstream os;
        if (digits.empty()) {
            os << "0";
        } else {
            for (size_t k = 0; k < digits.size(); ++k) {
                if (digits[k] == 0) continue;
                if (os.tellp() > 0) os << "+";
                os << digits[k] << "t^" << (val + static_cast<int32_t>(k));
            }
        }
        if (!is_exact()) os << "+O(t^" << prec << ")";
        return os.str();
    }
};

}  // namespace heckemod
