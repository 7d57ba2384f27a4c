#include <doctest.h>

#include "heckemod/module_action.hpp"
#include "heckemod/report.hpp"

using namespace heckemod;
using G = Generator;

namespace {

WeylElem id3() { return WeylElem::identity(3); }
WeylElem w1() { return WeylElem::omega1(3); }
WeylElem w2() { return WeylElem::omega2(3); }

ModuleVector unit(const WeylElem& w, int a1, int a2) {
    return ModuleVector::unit(BasisFunction(w, LatticeVec(a1, a2)));
}

}  // namespace

TEST_CASE("basis keys enforce S_omega membership and order canonically") {
    CHECK_THROWS_AS(BasisFunction(id3(), LatticeVec(1, 0)), std::invalid_argument);
    CHECK_NOTHROW(BasisFunction(w2(), LatticeVec(1, 0)));
    const BasisFunction x(id3(), LatticeVec(-2, -1));
    const BasisFunction y(id3(), LatticeVec(-2, 0));
    const BasisFunction z(w1(), LatticeVec(0, -1));
    CHECK(x < y);
    CHECK(y < z);
    CHECK(x.str() == "f[123;(-2,-1)]");
}

TEST_CASE("left translation by gamma") {
    const BasisFunction f(id3(), LatticeVec(-2, -1));
    const BasisFunction g = act_gamma_left(f);
    CHECK(g.omega == w2() * w2());
    CHECK(g.a == LatticeVec(2, 3));

    const BasisFunction h = act_gamma_left(BasisFunction(id3(), LatticeVec(0, 0)));
    CHECK(h.omega == w2() * w2());
    CHECK(h.a == LatticeVec(1, 1));

    // Applying the map three times returns the coordinates (and the Weyl
    // part, since w2 has order 3).
    for (const auto& key : window_basis(CharacterCase::Iwahori, Window(3))) {
        const BasisFunction thrice = act_gamma_left(act_gamma_left(act_gamma_left(key)));
        REQUIRE(thrice.a == key.a);
        REQUIRE(thrice.omega == key.omega);
    }
}

TEST_CASE("T_gamma action: pinned values and order three") {
    const WeightConfig cfg(CharacterCase::Iwahori, 3);
    CHECK(act_T_gamma(unit(id3(), -2, -1), cfg) == unit(w2(), 2, -1));
    CHECK(act_T_gamma(unit(id3(), 0, 0), cfg) == unit(w2(), 1, 0));
    for (const auto& key : window_basis(CharacterCase::Iwahori, Window(4))) {
        const ModuleVector v = ModuleVector::unit(key);
        REQUIRE(act_T_gamma(act_T_gamma(act_T_gamma(v, cfg), cfg), cfg) == v);
    }
    const WeightConfig reg(CharacterCase::Regular, 3);
    CHECK_THROWS_AS(act_T_gamma(unit(id3(), -2, -1), reg), std::domain_error);
}

TEST_CASE("T_omega1 action: the three branches") {
    const WeightConfig c0(CharacterCase::Iwahori, 5, 0);
    const WeightConfig cm1(CharacterCase::Iwahori, 5, -1);

    CHECK(act_T_omega1(unit(w2(), 2, -1), c0) == unit(w2() * w1(), -1, 2));

    ModuleVector minus;
    minus.add_term(BasisFunction(id3(), LatticeVec(-2, -1)), -1, PrimeField(5));
    CHECK(act_T_omega1(unit(id3(), -2, -1), c0) == minus);

    CHECK(act_T_omega1(unit(id3(), -1, -1), c0).is_zero());
    ModuleVector wall;
    wall.add_term(BasisFunction(id3(), LatticeVec(-1, -1)), -1, PrimeField(5));
    CHECK(act_T_omega1(unit(id3(), -1, -1), cm1) == wall);

    const WeightConfig reg(CharacterCase::Regular, 5);
    CHECK_THROWS_AS(act_T_omega1(unit(id3(), -1, -1), reg), std::domain_error);
}

TEST_CASE("wall scalars can differ between Id and w2^2") {
    WeightConfig cfg(CharacterCase::Iwahori, 5, 0);
    cfg.set_wall_scalar(w2() * w2(), -1);

    CHECK(act_T_omega1(unit(id3(), -1, -1), cfg).is_zero());
    ModuleVector wall;
    wall.add_term(BasisFunction(w2() * w2(), LatticeVec(1, 1)), -1, PrimeField(5));
    CHECK(act_T_omega1(unit(w2() * w2(), 1, 1), cfg) == wall);

    // The quadratic relation is per-key, so mixed scalars still satisfy it.
    for (const auto& oc : verify_relations_on_window(cfg, Window(4)))
        REQUIRE(oc.failures == 0);

    CHECK_THROWS_AS(cfg.set_wall_scalar(w2(), -1), std::domain_error);
    CHECK_THROWS_AS(cfg.set_wall_scalar(id3(), 7), std::invalid_argument);
}

TEST_CASE("semi-regular T_{w1 t_(0,-1)}: flips the region and shifts") {
    const WeightConfig cfg(CharacterCase::SemiRegular, 3);
    CHECK(act_T_omega1_t01m(unit(id3(), -2, -1), cfg) == unit(w1(), -1, -3));
    CHECK(act_T_omega1_t01m(unit(w1(), -1, -3), cfg) == unit(id3(), -3, -2));

    // Squaring translates by (-1,-1) without leaving the region.
    for (const auto& key : window_basis(CharacterCase::SemiRegular, Window(4))) {
        const ModuleVector v = ModuleVector::unit(key);
        const ModuleVector twice = act_T_omega1_t01m(act_T_omega1_t01m(v, cfg), cfg);
        const LatticeVec expect(key.a.coords[0] - 1, key.a.coords[1] - 1);
        REQUIRE(twice == ModuleVector::unit(BasisFunction(key.omega, expect)));
    }
    const WeightConfig iw(CharacterCase::Iwahori, 3);
    CHECK_THROWS_AS(act_T_omega1_t01m(unit(id3(), -2, -1), iw), std::domain_error);
}

TEST_CASE("semi-regular T_{w1 t_(1,0)} vanishes") {
    const WeightConfig cfg(CharacterCase::SemiRegular, 3);
    CHECK(act_T_omega1_t10(unit(id3(), -2, -1), cfg).is_zero());
    CHECK(act_T_omega1_t10(ModuleVector{}, cfg).is_zero());
    ModuleVector combo;
    PrimeField fp(3);
    combo.add_term(BasisFunction(id3(), LatticeVec(-2, -1)), 1, fp);
    combo.add_term(BasisFunction(id3(), LatticeVec(-1, 0)), 2, fp);
    combo.add_term(BasisFunction(w1(), LatticeVec(0, -1)), 1, fp);
    CHECK(act_T_omega1_t10(combo, cfg).is_zero());
}

TEST_CASE("regular generators: two translations, four annihilators") {
    const WeightConfig cfg(CharacterCase::Regular, 3);
    CHECK(act_regular_generator(G::Ttm10, unit(id3(), -2, -1), cfg) == unit(id3(), -3, -1));
    CHECK(act_regular_generator(G::Ttm1m1, unit(id3(), 0, 0), cfg) == unit(id3(), -1, -1));
    for (G g : {G::Tt10, G::Tt01, G::Tt0m1, G::Tt11})
        CHECK(act_regular_generator(g, unit(id3(), -2, -1), cfg).is_zero());
    const WeightConfig iw(CharacterCase::Iwahori, 3);
    CHECK_THROWS_AS(act_regular_generator(G::Ttm10, unit(id3(), 0, 0), iw), std::domain_error);
}

TEST_CASE("act_word folds left to right; empty word is the identity") {
    const WeightConfig cfg(CharacterCase::Iwahori, 5, 0);
    const OperatorWord empty = OperatorWord::empty(CharacterCase::Iwahori);
    CHECK(act_word(empty, unit(id3(), -2, -1), cfg) == unit(id3(), -2, -1));

    const OperatorWord gw1_sq(CharacterCase::Iwahori,
                              {G::TGamma, G::TOmega1, G::TGamma, G::TOmega1});
    const OperatorWord gw1g_sq(CharacterCase::Iwahori,
                               {G::TGamma, G::TOmega1, G::TGamma, G::TGamma, G::TOmega1, G::TGamma});
    for (const auto& a : Window(4).points(3)) {
        if (!s_omega_contains(id3(), a)) continue;
        const ModuleVector v = unit(id3(), a.coords[0], a.coords[1]);
        REQUIRE(act_word(gw1_sq, v, cfg) == unit(id3(), a.coords[0] - 1, a.coords[1]));
        REQUIRE(act_word(gw1g_sq, v, cfg) == unit(id3(), a.coords[0] - 1, a.coords[1] - 1));
    }

    const WeightConfig reg(CharacterCase::Regular, 5);
    CHECK_THROWS_AS(act_word(gw1_sq, unit(id3(), 0, 0), reg), std::invalid_argument);
}

TEST_CASE("composite table: both words per region act as the listed translation") {
    // Exercised for both wall scalars; the traces never touch the wall
    // branch, so the results agree.
    for (int c : {0, -1}) {
        const WeightConfig cfg(CharacterCase::Iwahori, 3, c);
        for (const auto& region : WeylElem::full_group(3)) {
            const auto table = composite_table(region);
            REQUIRE(table.size() == 2);
            for (const auto& a : Window(4).points(3)) {
                if (!s_omega_contains(region, a)) continue;
                const ModuleVector v = ModuleVector::unit(BasisFunction(region, a));
                for (const auto& [word, shift] : table) {
                    const ModuleVector got = act_word(word, v, cfg);
                    REQUIRE(got == ModuleVector::unit(BasisFunction(region, a + shift)));
                }
            }
        }
    }
    CHECK(composite_table(id3())[0].second == LatticeVec(-1, 0));
    CHECK(composite_table(w2() * w1())[1].second == LatticeVec(0, 1));
    CHECK(composite_table(w2() * w2())[1].second == LatticeVec(1, 1));
}

TEST_CASE("all case relations hold on the window basis") {
    for (uint32_t p : {2u, 3u, 5u}) {
        for (int c : {0, -1}) {
            for (CharacterCase cse :
                 {CharacterCase::Iwahori, CharacterCase::SemiRegular, CharacterCase::Regular}) {
                const WeightConfig cfg(cse, p, c);
                for (const auto& oc : verify_relations_on_window(cfg, Window(4))) {
                    CAPTURE(oc.name);
                    REQUIRE(oc.failures == 0);
                    REQUIRE(oc.checked > 0);
                }
            }
        }
    }
}

TEST_CASE("closure: every generator maps window basis keys to valid keys") {
    // BasisFunction construction re-checks S-membership, so a violation
    // would throw inside the action.
    for (CharacterCase cse :
         {CharacterCase::Iwahori, CharacterCase::SemiRegular, CharacterCase::Regular}) {
        const WeightConfig cfg(cse, 3, -1);
        for (const auto& key : window_basis(cse, Window(5)))
            for (Generator g : alphabet(cse))
                REQUIRE_NOTHROW(act_generator(g, ModuleVector::unit(key), cfg));
    }
}

TEST_CASE("actions are linear") {
    const WeightConfig cfg(CharacterCase::Iwahori, 5, -1);
    PrimeField fp(5);
    ModuleVector v;
    v.add_term(BasisFunction(id3(), LatticeVec(-2, -1)), 2, fp);
    v.add_term(BasisFunction(w2(), LatticeVec(1, -1)), 3, fp);
    v.add_term(BasisFunction(id3(), LatticeVec(-1, -1)), 4, fp);
    const OperatorWord w(CharacterCase::Iwahori, {G::TGamma, G::TOmega1, G::TGamma});
    // act(2x + 3y + 4z) == 2 act(x) + 3 act(y) + 4 act(z)
    ModuleVector expect;
    expect.add_scaled(act_word(w, unit(id3(), -2, -1), cfg), 2, fp);
    expect.add_scaled(act_word(w, unit(w2(), 1, -1), cfg), 3, fp);
    expect.add_scaled(act_word(w, unit(id3(), -1, -1), cfg), 4, fp);
    CHECK(act_word(w, v, cfg) == expect);
}

TEST_CASE("Hecke elements act through their words") {
    const WeightConfig cfg(CharacterCase::Regular, 3);
    HeckeElement e(CharacterCase::Regular, 3);
    e.add_term({G::Ttm10}, 1);
    e.add_term({G::Ttm1m1}, 2);
    const ModuleVector got = act_element(e, unit(id3(), -1, 0), cfg);
    PrimeField fp(3);
    ModuleVector expect;
    expect.add_term(BasisFunction(id3(), LatticeVec(-2, 0)), 1, fp);
    expect.add_term(BasisFunction(id3(), LatticeVec(-2, -1)), 2, fp);
    CHECK(got == expect);
}

TEST_CASE("normalization preserves the module action") {
    // Rewriting a word must not change what it does to the module: the
    // action is the semantic equality oracle for the presentation.
    for (CharacterCase cse :
         {CharacterCase::Iwahori, CharacterCase::SemiRegular, CharacterCase::Regular}) {
        const WeightConfig cfg(cse, 3, -1);
        const auto basis = window_basis(cse, Window(2));
        const auto sigma = alphabet(cse);
        std::vector<std::vector<Generator>> words = {{}};
        for (int len = 0; len < 4; ++len) {
            std::vector<std::vector<Generator>> next;
            for (const auto& w : words) {
                if (w.size() < static_cast<size_t>(len)) continue;
                for (Generator g : sigma) {
                    auto w2 = w;
                    w2.push_back(g);
                    next.push_back(w2);
                }
            }
            for (const auto& w : next) {
                HeckeElement e(cse, 3);
                e.add_term(w, 1);
                const HeckeElement n = normalize(e);
                for (const auto& key : basis) {
                    const ModuleVector v = ModuleVector::unit(key);
                    REQUIRE(act_word(OperatorWord(cse, w), v, cfg) == act_element(n, v, cfg));
                }
            }
            words = next;
        }
    }
}

TEST_CASE("canonical serialization sorts by (omega, a1, a2)") {
    PrimeField fp(5);
    ModuleVector v;
    v.add_term(BasisFunction(w1(), LatticeVec(0, -1)), 4, fp);
    v.add_term(BasisFunction(id3(), LatticeVec(-1, 0)), 1, fp);
    CHECK(v.str() == "1*f[123;(-1,0)] + 4*f[213;(0,-1)]");
    CHECK(ModuleVector{}.str() == "0");
}

TEST_CASE("window basis enumerations") {
    // B=2: 25 points for Iwahori; S_Id and S_w1 portions for semi-regular.
    CHECK(window_basis(CharacterCase::Iwahori, Window(2)).size() == 25);
    int s_id = 0, s_w1 = 0;
    for (const auto& a : Window(2).points(3)) {
        if (s_omega_contains(WeylElem::identity(3), a)) ++s_id;
        if (s_omega_contains(WeylElem::omega1(3), a)) ++s_w1;
    }
    CHECK(window_basis(CharacterCase::SemiRegular, Window(2)).size() ==
          static_cast<size_t>(s_id + s_w1));
    CHECK(window_basis(CharacterCase::Regular, Window(2)).size() == static_cast<size_t>(s_id));
}
