#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckemod/weyl.hpp"

namespace heckemod {

/// A point a = (a_1,...,a_{N-1}) of Z^{N-1} indexing the diagonal matrix
/// t_a = diag(pi^{a_1},...,pi^{a_{N-1}}, 1). The final exponent 0 is a
/// convention applied inside operations and never stored.
struct LatticeVec {
    std::vector<int> coords;

    LatticeVec() = default;
    explicit LatticeVec(std::vector<int> c) : coords(std::move(c)) {}
    LatticeVec(int a1, int a2) : coords{a1, a2} {}

    int rank() const { return static_cast<int>(coords.size()) + 1; }

    /// 1-based coordinate with the a_N = 0 convention.
    int at(int k) const {
        if (k < 1 || k > rank()) throw std::out_of_range("LatticeVec::at");
        return k == rank() ? 0 : coords[k - 1];
    }

    LatticeVec operator+(const LatticeVec& o) const {
        if (coords.size() != o.coords.size())
            throw std::invalid_argument("LatticeVec: rank mismatch");
        LatticeVec r = *this;
        for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
        return r;
    }

    bool operator==(const LatticeVec& o) const { return coords == o.coords; }
    bool operator!=(const LatticeVec& o) const { return coords != o.coords; }
    bool operator<(const LatticeVec& o) const { return coords < o.coords; }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (size_t i = 0; i < coords.size(); ++i) {
            if (i) os << ',';
            os << coords[i];
        }
        os << ')';
        return os.str();
    }
};

/// The closed box {a : |a_i| <= bound} used to truncate Z^{N-1} to desk scale.
struct Window {
    int bound;

    explicit Window(int b) : bound(b) {
        if (b < 0) throw std::invalid_argument("Window: bound must be >= 0");
    }

    bool contains(const LatticeVec& a) const {
        for (int c : a.coords)
            if (std::abs(c) > bound) return false;
        return true;
    }

    /// All points of the box in lexicographic order.
    std::vector<LatticeVec> points(int rank) const {
        const int m = rank - 1;
        std::vector<LatticeVec> out;
        std::vector<int> cur(m, -bound);
        while (true) {
            out.push_back(LatticeVec(cur));
            int i = m - 1;
            while (i >= 0 && cur[i] == bound) cur[i--] = -bound;
            if (i < 0) break;
            ++cur[i];
        }
        return out;
    }
};

/// Exponent l^w_{ij}(a) of the (i,j)-entry ideal of the conjugate group
/// w t_a I (w t_a)^{-1}: conjugating the Iwahori pattern by the monomial
/// matrix w t_a moves the (r,s)-entry ideal p^{eps(r,s)} of I, shifted by
/// a_r - a_s, to position (i,j) with r = w(i), s = w(j) in row-map terms.
/// Indices i, j are 1-based; i != j.
inline int entry_exponent(const WeylElem& w, const LatticeVec& a, int i, int j) {
    const int n = w.rank();
    if (a.rank() != n) throw std::invalid_argument("entry_exponent: rank mismatch");
    if (i < 1 || i > n || j < 1 || j > n || i == j)
        throw std::invalid_argument("entry_exponent: invalid index pair");
    const int r = w.image(i - 1) + 1;
    const int s = w.image(j - 1) + 1;
    return a.at(r) - a.at(s) + (r > s ? 1 : 0);
}

/// a lies in S_w iff l^w_{ij}(a) >= 1 for all pairs i > j, i.e. the
/// conjugate of I by w t_a intersected with K stays inside I.
inline bool s_omega_contains(const WeylElem& w, const LatticeVec& a) {
    const int n = w.rank();
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j)
            if (entry_exponent(w, a, i, j) < 1) return false;
    return true;
}

/// The sorting procedure producing the unique w with a in S_w: work through
/// target positions N, N-1, ..., 2; at each one select the maximum of the
/// remaining initial segment, at its largest attaining index, and move it
/// into the target position, the displaced entries shifting down one place
/// (the conjugating element of each step is a cycle, so entries that tie
/// keep their relative order). The result is w_(N-1) * ... * w_(1) as a
/// matrix product; equivalently, the stable ascending argsort of
/// (a_1, ..., a_{N-1}, 0).
inline WeylElem classify(const LatticeVec& a) {
    const int n = a.rank();
    std::vector<int> d(n);
    for (int k = 1; k <= n; ++k) d[k - 1] = a.at(k);
    WeylElem w = WeylElem::identity(n);
    for (int target = n; target >= 2; --target) {
        int best = 0;
        for (int idx = 1; idx < target; ++idx)
            if (d[idx] >= d[best]) best = idx;  // ties go to the largest index
        if (best == target - 1) continue;
        std::rotate(d.begin() + best, d.begin() + best + 1, d.begin() + target);
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        for (int k = best; k < target - 1; ++k) p[k] = k + 1;
        p[target - 1] = best;
        w = WeylElem(std::move(p)) * w;
    }
    return w;
}

/// Result of scanning a window against the decomposition of Z^{N-1} into
/// the sets S_w. Violations record points covered zero or >= 2 times.
struct PartitionResult {
    std::map<LatticeVec, WeylElem> classes;
    std::map<WeylElem, int> class_sizes;
    std::vector<std::pair<LatticeVec, int>> violations;  // point, cover count

    bool ok() const { return violations.empty(); }
};

inline PartitionResult partition_window(const Window& w, int rank) {
    PartitionResult res;
    const auto group = WeylElem::full_group(rank);
    for (const auto& a : w.points(rank)) {
        int covered = 0;
        std::optional<WeylElem> owner;
        for (const auto& g : group) {
            if (s_omega_contains(g, a)) {
                ++covered;
                owner = g;
            }
        }
        const WeylElem cls = classify(a);
        if (covered != 1 || !(*owner == cls)) {
            res.violations.emplace_back(a, covered);
            continue;
        }
        res.classes.emplace(a, cls);
        res.class_sizes[cls] += 1;
    }
    return res;
}

/// b is proper to a inside S_w: the intersected conjugate subgroup for b is
/// contained in the one for a, read off entrywise as
/// max(l^w_{ij}(b), 0) >= max(l^w_{ij}(a), 0) for all i != j.
inline bool is_proper(const WeylElem& w, const LatticeVec& b, const LatticeVec& a) {
    if (!s_omega_contains(w, a) || !s_omega_contains(w, b))
        throw std::domain_error("is_proper: arguments must lie in S_omega");
    const int n = w.rank();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            const int lb = entry_exponent(w, b, i, j);
            const int la = entry_exponent(w, a, i, j);
            if (std::max(lb, 0) < std::max(la, 0)) return false;
        }
    return true;
}

}  // namespace heckemod
