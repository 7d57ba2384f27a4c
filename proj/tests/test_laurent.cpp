#include <doctest.h>

#include "heckemod/gmat.hpp"
#include "heckemod/laurent.hpp"

using namespace heckemod;
using TS = TruncSeries;

TEST_CASE("series arithmetic: exact polynomials") {
    const TS one = TS::one(3);
    const TS t = TS::monomial(3, 1, 1);
    const TS a = one + t;            // 1 + t
    const TS b = one - t;            // 1 + 2t
    const TS prod = a * b;           // 1 - t^2
    CHECK(prod.is_exact());
    CHECK(prod.digit_at(0) == 1);
    CHECK(prod.digit_at(1) == 0);
    CHECK(prod.digit_at(2) == 2);
    CHECK((a - a).is_exact_zero());
    CHECK((a + b).digit_at(0) == 2);

    const TS tm2 = TS::monomial(3, 2, -2);
    CHECK((tm2 * t).val == -1);
    CHECK(tm2.exact_val() == -2);
}

TEST_CASE("series normalization trims and tracks valuation") {
    const TS x = TS::from_digits(5, 2, {0, 0, 3, 0, 1, 0, 0});
    CHECK(x.val == 4);
    CHECK(x.digits == std::vector<uint32_t>{3, 0, 1});
    const TS y = TS::from_digits(5, 0, {0, 0, 0});
    CHECK(y.is_exact_zero());
}

TEST_CASE("precision propagates pessimistically") {
    const TS o5 = TS::zero_at(2, 5);            // O(t^5)
    const TS one = TS::one(2);
    const TS s = one + o5;
    CHECK(s.prec == 5);
    CHECK(s.val == 0);
    // Multiplying by t^3 shifts the error term.
    const TS shifted = s * TS::monomial(2, 1, 3);
    CHECK(shifted.prec == 8);
    CHECK(shifted.val == 3);
    // O(t^5) * O(t^5) = O(t^10).
    CHECK((o5 * o5).prec == 10);
    // Exact zero absorbs.
    CHECK((TS::zero(2) * s).is_exact_zero());
}

TEST_CASE("valuation queries respect guaranteed precision") {
    const TS o3 = TS::zero_at(2, 3);
    CHECK(o3.val_at_least(2));
    CHECK(o3.val_at_least(3));
    CHECK_THROWS_AS(o3.val_at_least(4), PrecisionError);
    CHECK_THROWS_AS(o3.exact_val(), PrecisionError);
    CHECK_FALSE(o3.is_unit());
    const TS om1 = TS::zero_at(2, -1);
    CHECK_THROWS_AS(om1.is_unit(), PrecisionError);

    const TS u = TS::monomial(3, 2, 0);
    CHECK(u.is_unit());
    CHECK(u.val_at_least(0));
    CHECK_FALSE(u.val_at_least(1));
    CHECK(TS::zero(3).val_at_least(100));
    CHECK(o3.is_zero_to(3));
    CHECK_THROWS_AS(o3.is_zero_to(4), PrecisionError);
    CHECK_FALSE(u.is_zero_to(4));
}

TEST_CASE("series inversion") {
    SUBCASE("monomial inverse is exact") {
        const TS x = TS::monomial(5, 3, -2);
        const TS xi = x.inverse(10);
        CHECK(xi.is_exact());
        CHECK((x * xi - TS::one(5)).is_exact_zero());
    }
    SUBCASE("unit series inverse to a cap") {
        const TS x = TS::one(3) + TS::monomial(3, 2, 1) + TS::monomial(3, 1, 3);
        const TS xi = x.inverse(8);
        const TS err = x * xi - TS::one(3);
        CHECK_FALSE(err.known_nonzero());
        CHECK(err.prec >= 8);
    }
    SUBCASE("inverting an undetermined element fails") {
        CHECK_THROWS_AS(TS::zero_at(3, 4).inverse(8), PrecisionError);
    }
    SUBCASE("finite-precision input keeps relative precision") {
        const TS x = (TS::one(2) + TS::monomial(2, 1, 1)) + TS::zero_at(2, 6);
        const TS xi = x.inverse(100);
        CHECK(xi.prec == 6);
        CHECK_FALSE((x * xi - TS::one(2)).known_nonzero());
    }
}

TEST_CASE("matrix layer: products respect the permutation convention") {
    const uint32_t q = 3;
    for (const auto& u : WeylElem::full_group(3))
        for (const auto& v : WeylElem::full_group(3)) {
            const GMat lhs = GMat::permutation(q, u) * GMat::permutation(q, v);
            const GMat rhs = GMat::permutation(q, u * v);
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j)
                    REQUIRE(lhs.at(i, j).identical(rhs.at(i, j)));
        }
}

TEST_CASE("matrix layer: determinants and inverses") {
    const uint32_t q = 2;
    const GMat ta = GMat::diag_t(q, LatticeVec(-2, 1));
    CHECK(ta.det().exact_val() == -1);
    const GMat prod = ta * ta.inverse(8);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const TS want = i == j ? TS::one(q) : TS::zero(q);
            REQUIRE((prod.at(i, j) - want).is_exact_zero());
        }
    const GMat g = GMat::gamma(q) * GMat::gamma_inverse(q);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            REQUIRE((g.at(i, j) - (i == j ? TS::one(q) : TS::zero(q))).is_exact_zero());

    // gamma^3 is the central element t.
    const GMat g3 = GMat::gamma(q) * GMat::gamma(q) * GMat::gamma(q);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const TS want = i == j ? TS::monomial(q, 1, 1) : TS::zero(q);
            REQUIRE((g3.at(i, j) - want).is_exact_zero());
        }
}

TEST_CASE("subgroup membership") {
    const uint32_t q = 2;
    const GMat eye = GMat::identity(q);
    CHECK(in_K(eye));
    CHECK(in_I(eye));
    CHECK(in_I1(eye));
    CHECK(in_K1(eye));
    CHECK(in_KZ(eye));
    CHECK(in_IZ(eye));

    const GMat upper = GMat::elementary(q, 1, 2, TS::one(q));
    CHECK(in_I1(upper));
    CHECK_FALSE(in_K1(upper));
    const GMat lower0 = GMat::elementary(q, 2, 1, TS::one(q));
    CHECK(in_K(lower0));
    CHECK_FALSE(in_I(lower0));
    const GMat lower1 = GMat::elementary(q, 2, 1, TS::monomial(q, 1, 1));
    CHECK(in_I1(lower1));
    CHECK(in_K1(lower1));

    const GMat ta = GMat::diag_t(q, LatticeVec(-2, -1));
    CHECK_FALSE(in_K(ta));
    CHECK_FALSE(in_KZ(ta));
    CHECK(in_KZ(GMat::central_t(q, -3)));
    CHECK(in_KZ(GMat::central_t(q, 2) * upper));
    CHECK(in_IZ(GMat::central_t(q, -1) * lower1));
    CHECK_FALSE(in_IZ(GMat::permutation(q, WeylElem::omega1(3))));
    CHECK(in_KZ(GMat::permutation(q, WeylElem::omega1(3))));

    // Undetermined entries raise instead of guessing.
    GMat fuzzy = GMat::identity(q);
    fuzzy.at(1, 1) = TS::one(q) + TS::zero_at(q, 0);
    CHECK_THROWS_AS(in_KZ(fuzzy), PrecisionError);

    // Tagged dispatch agrees with the direct tests; B cap K zeroes the
    // lower entries to the working depth.
    using Tag = SubgroupSpec::Tag;
    CHECK(in_subgroup(SubgroupSpec(Tag::I1, 8), upper));
    CHECK_FALSE(in_subgroup(SubgroupSpec(Tag::K1, 8), upper));
    CHECK(in_subgroup(SubgroupSpec(Tag::BK, 8), upper));
    CHECK_FALSE(in_subgroup(SubgroupSpec(Tag::BK, 8), lower1));
    CHECK(in_subgroup(SubgroupSpec(Tag::I, 8), lower1));
    CHECK(in_subgroup(SubgroupSpec(Tag::K, 8), lower0));
}
