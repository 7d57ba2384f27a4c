#include <doctest.h>

#include <map>
#include <set>

#include "heckemod/lattice.hpp"
#include "heckemod/weyl.hpp"

using namespace heckemod;

namespace {

WeylElem id3() { return WeylElem::identity(3); }
WeylElem w1() { return WeylElem::omega1(3); }
WeylElem w2() { return WeylElem::omega2(3); }

// The six inequality systems of the explicit N=3 display, one per region.
bool region_id(const LatticeVec& a) { return a.coords[0] <= a.coords[1] && a.coords[1] <= 0; }
bool region_w1(const LatticeVec& a) {
    return a.coords[1] + 1 <= a.coords[0] && a.coords[0] <= 0;
}
bool region_w1w2(const LatticeVec& a) {
    return a.coords[0] >= a.coords[1] + 1 && a.coords[1] + 1 >= 2;
}
bool region_w2w1(const LatticeVec& a) { return a.coords[0] <= 0 && a.coords[1] >= 1; }
bool region_w2(const LatticeVec& a) { return a.coords[0] >= 1 && a.coords[1] <= 0; }
bool region_w2sq(const LatticeVec& a) { return a.coords[1] >= a.coords[0] && a.coords[0] >= 1; }

}  // namespace

TEST_CASE("Weyl group generators and presentation facts") {
    CHECK(w1().order() == 2);
    CHECK(w2().order() == 3);
    CHECK(WeylElem::omega2(4).order() == 4);
    CHECK((w1() * w1()).is_identity());
    CHECK((w2() * w2() * w2()).is_identity());
    CHECK((w2() * w2().inverse()).is_identity());

    // The six permutation matrices of the N=3 display, by one-line notation.
    CHECK(id3().one_line() == "123");
    CHECK(w1().one_line() == "213");
    CHECK((w1() * w2()).one_line() == "321");
    CHECK((w2() * w1()).one_line() == "132");
    CHECK(w2().one_line() == "231");
    CHECK((w2() * w2()).one_line() == "312");

    CHECK(WeylElem::full_group(3).size() == 6);
    CHECK(WeylElem::full_group(4).size() == 24);

    CHECK(WeylElem::from_one_line("312") == w2() * w2());
    CHECK_THROWS_AS(WeylElem(std::vector<int>{0, 0, 2}), std::invalid_argument);
}

TEST_CASE("entry exponents: pinned values and contract") {
    CHECK(entry_exponent(id3(), LatticeVec(-2, -1), 2, 1) == 2);
    CHECK(entry_exponent(w1(), LatticeVec(0, -1), 2, 1) == 1);

    // t_0 is the identity, so the exponents are those of I itself.
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            CHECK(entry_exponent(id3(), LatticeVec(0, 0), i, j) == (i > j ? 1 : 0));
        }

    CHECK_THROWS_AS(entry_exponent(id3(), LatticeVec(0, 0), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(entry_exponent(id3(), LatticeVec(0, 0), 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(entry_exponent(id3(), LatticeVec(0, 0), 1, 4), std::invalid_argument);
}

TEST_CASE("antisymmetry l_ij + l_ji = 1 over windows, N = 3 and 4") {
    for (int rank : {3, 4}) {
        const Window w(4);
        const auto group = WeylElem::full_group(rank);
        for (const auto& a : w.points(rank))
            for (const auto& g : group)
                for (int i = 1; i <= rank; ++i)
                    for (int j = 1; j <= rank; ++j) {
                        if (i == j) continue;
                        REQUIRE(entry_exponent(g, a, i, j) + entry_exponent(g, a, j, i) == 1);
                    }
    }
}

TEST_CASE("S_omega membership: pinned values") {
    CHECK(s_omega_contains(id3(), LatticeVec(-2, -1)));
    CHECK(s_omega_contains(w2(), LatticeVec(2, -1)));
    CHECK_FALSE(s_omega_contains(id3(), LatticeVec(1, 0)));
}

TEST_CASE("N=3 table fidelity: the six printed inequality systems") {
    const Window w(6);
    const std::vector<std::pair<WeylElem, bool (*)(const LatticeVec&)>> table = {
        {id3(), region_id},          {w1(), region_w1}, {w1() * w2(), region_w1w2},
        {w2() * w1(), region_w2w1},  {w2(), region_w2}, {w2() * w2(), region_w2sq},
    };
    for (const auto& a : w.points(3))
        for (const auto& [g, pred] : table) REQUIRE(s_omega_contains(g, a) == pred(a));
}

TEST_CASE("classify: pinned values and consistency") {
    CHECK(classify(LatticeVec(0, 0)) == id3());
    CHECK(classify(LatticeVec(2, 1)) == w1() * w2());
    CHECK(classify(LatticeVec(1, 2)) == w2() * w2());
    CHECK(classify(LatticeVec(1, 0)) == w2());

    const Window w(6);
    for (const auto& a : w.points(3)) REQUIRE(s_omega_contains(classify(a), a));
    for (const auto& a : Window(2).points(4)) REQUIRE(s_omega_contains(classify(a), a));
}

TEST_CASE("classify equals the stable ascending argsort of (a, 0)") {
    auto stable_argsort = [](const LatticeVec& a) {
        std::vector<int> idx(static_cast<size_t>(a.rank()));
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](int x, int y) { return a.at(x + 1) < a.at(y + 1); });
        return WeylElem(idx);
    };
    for (const auto& a : Window(4).points(3)) REQUIRE(classify(a) == stable_argsort(a));
    for (const auto& a : Window(2).points(4)) REQUIRE(classify(a) == stable_argsort(a));
}

TEST_CASE("partition of the window: each point in exactly one class") {
    SUBCASE("N=3, B=5") {
        const auto res = partition_window(Window(5), 3);
        CHECK(res.ok());
        CHECK(res.classes.size() == 121);
        CHECK(res.class_sizes.size() == 6);
    }
    SUBCASE("N=4, B=3") {
        const auto res = partition_window(Window(3), 4);
        CHECK(res.ok());
        CHECK(res.classes.size() == 343);
        CHECK(res.class_sizes.size() == 24);
    }
    SUBCASE("B=1 pins (0,0) to the identity class") {
        const auto res = partition_window(Window(1), 3);
        CHECK(res.ok());
        CHECK(res.classes.at(LatticeVec(0, 0)) == id3());
    }
}

TEST_CASE("properness: pinned values, contract, and the S_Id shortcut") {
    CHECK(is_proper(id3(), LatticeVec(-3, -2), LatticeVec(-1, 0)));
    CHECK(is_proper(id3(), LatticeVec(-2, -1), LatticeVec(-2, -1)));
    CHECK_FALSE(is_proper(id3(), LatticeVec(-1, -1), LatticeVec(-2, -1)));
    CHECK_THROWS_AS(is_proper(id3(), LatticeVec(1, 0), LatticeVec(0, 0)), std::domain_error);

    // On S_Id the entrywise criterion collapses to b1 <= a1, b2 <= a2,
    // b2 - b1 >= a2 - a1.
    const Window w(4);
    std::vector<LatticeVec> pts;
    for (const auto& a : w.points(3))
        if (s_omega_contains(id3(), a)) pts.push_back(a);
    for (const auto& a : pts)
        for (const auto& b : pts) {
            const bool expected = b.coords[0] <= a.coords[0] && b.coords[1] <= a.coords[1] &&
                                  b.coords[1] - b.coords[0] >= a.coords[1] - a.coords[0];
            REQUIRE(is_proper(id3(), b, a) == expected);
        }
}

TEST_CASE("properness is a partial order on each region") {
    const Window w(3);
    for (const auto& g : {id3(), w2(), w1() * w2()}) {
        std::vector<LatticeVec> pts;
        for (const auto& a : w.points(3))
            if (s_omega_contains(g, a)) pts.push_back(a);
        for (const auto& a : pts) {
            REQUIRE(is_proper(g, a, a));
            for (const auto& b : pts) {
                if (is_proper(g, b, a) && is_proper(g, a, b)) REQUIRE(a == b);
                for (const auto& c : pts)
                    if (is_proper(g, b, a) && is_proper(g, c, b))
                        REQUIRE(is_proper(g, c, a));
            }
        }
    }
}

TEST_CASE("containment surrogate: in S_omega all reversed pairs have l <= 0") {
    const Window w(4);
    for (const auto& g : WeylElem::full_group(3))
        for (const auto& a : w.points(3)) {
            if (!s_omega_contains(g, a)) continue;
            for (int i = 2; i <= 3; ++i)
                for (int j = 1; j < i; ++j) REQUIRE(entry_exponent(g, a, j, i) <= 0);
        }
}
