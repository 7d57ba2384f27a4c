#pragma once

#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckemod/oracle.hpp"

namespace heckemod {

/// One line of a claim file: a membership or identity assertion from the
/// coset computations, instantiated with concrete small parameters.
///
/// Format: `<kind> key=value ...` with `#` comments and blank lines
/// ignored. Kinds and their keys:
///
///   case1           a1 a2 u b1 b2    t_(a2,a1) u12(u) w1      in KZ t_(b1,b2) I1
///   case3           a1 a2 u b1 b2    t_a u12(u) w1            in KZ t_(b1,b2) I1  (a1 = a2)
///   semiregular_t23 a1 a2 u b1 b2    t_(a2,a1-1) e23(u) t_(0,1) w1   in ...
///   regular_t1      a1 a2 t1 b1 b2   t_(a1-1,a2) e12(t1) t_(1,0)     in ...
///   regular_t1t2    a1 a2 t1 t2 b1 b2
///   regular_t2      a1 a2 t2 b1 b2
///   coset_share     a1 a2 t2 b1 b2   t_(b-target shares coset with e13(t2/t))
///   gl2             u [k] [u2]       the 2x2 swap/unipotent matrix identity
///   s_omega         omega a1 a2 want definitional S_omega membership
struct Claim {
    int line_no = 0;
    std::string kind;
    std::map<std::string, std::string> kv;

    bool has(const std::string& k) const { return kv.count(k) != 0; }
    int geti(const std::string& k) const {
        auto it = kv.find(k);
        if (it == kv.end())
            throw std::invalid_argument("claim line " + std::to_string(line_no) +
                                        ": missing key '" + k + "'");
        return std::stoi(it->second);
    }
    int geti_or(const std::string& k, int dflt) const { return has(k) ? geti(k) : dflt; }
    std::string gets(const std::string& k) const {
        auto it = kv.find(k);
        if (it == kv.end())
            throw std::invalid_argument("claim line " + std::to_string(line_no) +
                                        ": missing key '" + k + "'");
        return it->second;
    }
};

inline std::vector<Claim> parse_claims(std::istream& in) {
    std::vector<Claim> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        Claim c;
        c.line_no = no;
        if (!(ls >> c.kind)) continue;
        std::string tok;
        while (ls >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("claim line " + std::to_string(no) +
                                            ": expected key=value, got '" + tok + "'");
            c.kv[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
        out.push_back(std::move(c));
    }
    return out;
}

struct ClaimResult {
    int line_no;
    std::string kind;
    bool pass;
    std::string detail;
};

namespace detail {

/// The 2x2 identity swapping a unipotent past the Weyl reflection:
/// [[0,1],[1,0]] [[1,x],[0,1]] = [[1,1/x],[0,1]] [[-1/x,0],[0,x]] [[1,0],[1/x,1]]
/// for x != 0. Verified entrywise; exact when x is a monomial, otherwise to
/// the guaranteed precision of the series inverse.
inline ClaimResult check_gl2_identity(const Oracle& orc, const TruncSeries& x, int line_no) {
    using TS = TruncSeries;
    const uint32_t q = orc.q;
    const TS xinv = x.inverse(orc.depth);
    const TS one = TS::one(q), zero = TS::zero(q);
    auto mul2 = [&](const std::array<TS, 4>& a, const std::array<TS, 4>& b) {
        return std::array<TS, 4>{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                                 a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
    };
    const std::array<TS, 4> w{zero, one, one, zero};
    const std::array<TS, 4> upper{one, x, zero, one};
    const std::array<TS, 4> lhs = mul2(w, upper);
    const std::array<TS, 4> r1{one, xinv, zero, one};
    const std::array<TS, 4> r2{-xinv, zero, zero, x};
    const std::array<TS, 4> r3{one, zero, xinv, one};
    const std::array<TS, 4> rhs = mul2(mul2(r1, r2), r3);
    for (int k = 0; k < 4; ++k) {
        const TS d = lhs[static_cast<size_t>(k)] - rhs[static_cast<size_t>(k)];
        if (d.known_nonzero())
            return {line_no, "gl2", false, "entry " + std::to_string(k) + " differs: " + d.str()};
    }
    return {line_no, "gl2", true, x.is_exact() && x.digits.size() == 1
                                      ? "identity exact"
                                      : "identity holds to guaranteed precision"};
}

}  // namespace detail

/// Evaluates one claim against the oracle. Classification claims compare
/// classify_KZtI1 of the constructed element with the expected coset;
/// failures of any kind (including precision or bound errors) are reported
/// as non-passing results with the reason.
inline ClaimResult run_claim(const Claim& c, const Oracle& orc) {
    const uint32_t q = orc.q;
    auto mono = [&](int digit, int k = 0) {
        return TruncSeries::monomial(q, digit, k);
    };
    try {
        if (c.kind == "gl2") {
            const int u = c.geti("u");
            const int k = c.geti_or("k", 0);
            TruncSeries x = mono(u, k);
            if (c.has("u2")) x = x + mono(c.geti("u2"), k + 1);
            return detail::check_gl2_identity(orc, x, c.line_no);
        }
        if (c.kind == "s_omega") {
            const WeylElem w = WeylElem::from_one_line(c.gets("omega"));
            const LatticeVec a(c.geti("a1"), c.geti("a2"));
            const bool want = c.geti("want") != 0;
            const bool got = orc.s_omega_bruteforce(w, a);
            return {c.line_no, c.kind, got == want,
                    "S_" + w.one_line() + " " + a.str() + " -> " + (got ? "true" : "false")};
        }

        const int a1 = c.geti("a1"), a2 = c.geti("a2");
        const LatticeVec expect(c.geti("b1"), c.geti("b2"));
        GMat g(q);
        if (c.kind == "case1" || c.kind == "case3") {
            if (c.kind == "case1" && !(a1 > a2))
                throw std::invalid_argument("case1 requires a1 > a2");
            if (c.kind == "case3" && a1 != a2)
                throw std::invalid_argument("case3 requires a1 = a2");
            const LatticeVec support = c.kind == "case1" ? LatticeVec(a2, a1) : LatticeVec(a1, a2);
            g = GMat::diag_t(q, support) * GMat::elementary(q, 1, 2, mono(c.geti("u"))) *
                GMat::permutation(q, WeylElem::omega1(3));
        } else if (c.kind == "semiregular_t23") {
            g = GMat::diag_t(q, LatticeVec(a2, a1 - 1)) *
                GMat::elementary(q, 2, 3, mono(c.geti("u"))) *
                GMat::diag_t(q, LatticeVec(0, 1)) * GMat::permutation(q, WeylElem::omega1(3));
        } else if (c.kind == "regular_t1") {
            g = GMat::diag_t(q, LatticeVec(a1 - 1, a2)) *
                GMat::elementary(q, 1, 2, mono(c.geti("t1"))) * GMat::diag_t(q, LatticeVec(1, 0));
        } else if (c.kind == "regular_t1t2") {
            g = GMat::diag_t(q, LatticeVec(a1 - 1, a2)) *
                GMat::elementary(q, 1, 2, mono(c.geti("t1"))) *
                GMat::elementary(q, 1, 3, mono(c.geti("t2"))) * GMat::diag_t(q, LatticeVec(1, 0));
        } else if (c.kind == "regular_t2") {
            g = GMat::diag_t(q, LatticeVec(a1 - 1, a2)) *
                GMat::elementary(q, 1, 3, mono(c.geti("t2"))) * GMat::diag_t(q, LatticeVec(1, 0));
        } else if (c.kind == "coset_share") {
            g = GMat::diag_t(q, LatticeVec(a2 + 1, a1 - 1)) *
                GMat::elementary(q, 1, 3, mono(c.geti("t2"), -1));
        } else {
            throw std::invalid_argument("unknown claim kind '" + c.kind + "'");
        }
        int bound = 2;
        for (int v : {a1, a2, expect.coords[0], expect.coords[1]})
            bound = std::max(bound, std::abs(v));
        bound += 2;
        const LatticeVec got = orc.classify_KZtI1(g, bound);
        return {c.line_no, c.kind, got == expect,
                "classified " + got.str() + ", expected " + expect.str()};
    } catch (const std::exception& ex) {
        return {c.line_no, c.kind, false, std::string("error: ") + ex.what()};
    }
}

inline std::vector<ClaimResult> run_claims(const std::vector<Claim>& cs, const Oracle& orc) {
    std::vector<ClaimResult> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(run_claim(c, orc));
    return out;
}

}  // namespace heckemod
