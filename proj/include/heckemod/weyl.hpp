#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace heckemod {

/// An element of the finite Weyl group W_0 of GL_N, stored as a permutation
/// matrix in row form: row i carries its 1 in column perm[i] (0-based).
///
/// With this convention, conjugating a diagonal matrix diag(d_0,...,d_{N-1})
/// by the matrix of w yields diag(d_{w(0)},...,d_{w(N-1)}), and the matrix
/// product u*v corresponds to composing row maps as (u*v)(i) = v(u(i)).
class WeylElem {
public:
    explicit WeylElem(std::vector<int> images) : perm_(std::move(images)) {
        const int n = static_cast<int>(perm_.size());
        if (n < 1) throw std::invalid_argument("WeylElem: empty permutation");
        std::vector<bool> seen(n, false);
        for (int v : perm_) {
            if (v < 0 || v >= n || seen[v])
                throw std::invalid_argument("WeylElem: not a permutation of 0..N-1");
            seen[v] = true;
        }
    }

    static WeylElem identity(int n) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        return WeylElem(std::move(p));
    }

    /// The transposition of the first two coordinates (the 2x2 block beta).
    static WeylElem omega1(int n) { return transposition(n, 0, 1); }

    /// The N-cycle whose matrix is [[0, I_{N-1}], [1, 0]]: row i has its 1
    /// in column i+1 mod N.
    static WeylElem omega2(int n) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
        return WeylElem(std::move(p));
    }

    static WeylElem transposition(int n, int r, int s) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::swap(p[r], p[s]);
        return WeylElem(std::move(p));
    }

    int rank() const { return static_cast<int>(perm_.size()); }

    /// Row map: column of the 1 in row i.
    int image(int i) const { return perm_[i]; }

    bool is_identity() const {
        for (int i = 0; i < rank(); ++i)
            if (perm_[i] != i) return false;
        return true;
    }

    /// Matrix product. (u*v).image(i) = v.image(u.image(i)).
    WeylElem operator*(const WeylElem& rhs) const {
        if (rank() != rhs.rank()) throw std::invalid_argument("WeylElem: rank mismatch");
        std::vector<int> p(perm_.size());
        for (int i = 0; i < rank(); ++i) p[i] = rhs.perm_[perm_[i]];
        return WeylElem(std::move(p));
    }

    WeylElem inverse() const {
        std::vector<int> p(perm_.size());
        for (int i = 0; i < rank(); ++i) p[perm_[i]] = i;
        return WeylElem(std::move(p));
    }

    WeylElem power(int e) const {
        WeylElem base = e >= 0 ? *this : inverse();
        int k = e >= 0 ? e : -e;
        WeylElem acc = identity(rank());
        for (int i = 0; i < k; ++i) acc = acc * base;
        return acc;
    }

    int order() const {
        WeylElem acc = *this;
        int k = 1;
        while (!acc.is_identity()) {
            acc = acc * *this;
            ++k;
        }
        return k;
    }

    bool operator==(const WeylElem& o) const { return perm_ == o.perm_; }
    bool operator!=(const WeylElem& o) const { return perm_ != o.perm_; }
    bool operator<(const WeylElem& o) const { return perm_ < o.perm_; }

    /// One-line notation with 1-based images, e.g. "231" for omega2 at N=3.
    std::string one_line() const {
        std::string s;
        for (int v : perm_) s += std::to_string(v + 1);
        return s;
    }

    static WeylElem from_one_line(const std::string& s) {
        std::vector<int> p;
        p.reserve(s.size());
        for (char c : s) {
            if (c < '1' || c > '9') throw std::invalid_argument("WeylElem: bad one-line string");
            p.push_back(c - '1');
        }
        return WeylElem(std::move(p));
    }

    /// All N! elements, sorted in the canonical (lexicographic) order.
    static std::vector<WeylElem> full_group(int n) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::vector<WeylElem> out;
        do {
            out.push_back(WeylElem(p));
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }

private:
    std::vector<int> perm_;
};

}  // namespace heckemod
