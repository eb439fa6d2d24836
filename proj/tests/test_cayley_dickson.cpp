#include <gtest/gtest.h>

#include "xprod/cayley_dickson.hpp"
#include "xprod/identity.hpp"
#include "xprod/isomorphism.hpp"

using namespace xprod;

namespace {

Rational q(long p, unsigned long d = 1) { return Rational(p, d); }
CDElement u(int level, std::size_t k) { return CDElement::basis_element(level, k); }

} // namespace

TEST(CDMul, ComplexAndQuaternionUnits) {
    EXPECT_EQ(cd_mul(u(1, 1), u(1, 1)), q(-1) * CDElement::unit(1));
    EXPECT_EQ(cd_mul(u(2, 1), u(2, 2)), u(2, 3));
    EXPECT_EQ(cd_mul(u(2, 2), u(2, 1)), q(-1) * u(2, 3));
    for (std::size_t k = 1; k < 8; ++k) EXPECT_EQ(cd_mul(u(3, k), u(3, k)), q(-1) * CDElement::unit(3));
    EXPECT_THROW((void)cd_mul(u(2, 1), u(3, 1)), DimensionMismatch);
    EXPECT_THROW(CDElement(2, {q(1), q(2)}), std::invalid_argument);
}

TEST(CDMul, UnitAndBilinearityAtEveryLevel) {
    SampleGenerator gen(1);
    for (int level = 0; level <= kMaxCdLevel; ++level) {
        const auto e = CDElement::unit(level);
        for (int s = 0; s < 10; ++s) {
            const auto x = random_element(gen, level), x2 = random_element(gen, level), y = random_element(gen, level);
            const Rational k = gen.scalar();
            ASSERT_EQ(cd_mul(e, x), x);
            ASSERT_EQ(cd_mul(x, e), x);
            ASSERT_EQ(cd_mul(k * x + x2, y), k * cd_mul(x, y) + cd_mul(x2, y));
            ASSERT_EQ(cd_mul(y, k * x + x2), k * cd_mul(y, x) + cd_mul(y, x2));
        }
    }
}

TEST(Conjugate, Examples) {
    EXPECT_EQ(conjugate(CDElement::unit(3)), CDElement::unit(3));
    EXPECT_EQ(conjugate(u(3, 1)), q(-1) * u(3, 1));
    SampleGenerator gen(2);
    for (int s = 0; s < 30; ++s) {
        const auto x = random_element(gen, 2), y = random_element(gen, 2);
        ASSERT_EQ(conjugate(cd_mul(x, y)), cd_mul(conjugate(y), conjugate(x)));
        const auto z = random_element(gen, 4);
        ASSERT_EQ(conjugate(conjugate(z)), z);
    }
}

TEST(Norm, Examples) {
    EXPECT_EQ(cd_norm_sq(CDElement::unit(3)), q(1));
    EXPECT_EQ(cd_norm_sq(u(3, 1) + u(3, 2)), q(2));
    SampleGenerator gen(3);
    for (int level = 0; level <= 3; ++level) {
        for (int s = 0; s < 20; ++s) {
            const auto x = random_element(gen, level), y = random_element(gen, level);
            ASSERT_EQ(cd_mul(x, conjugate(x)), cd_norm_sq(x) * CDElement::unit(level));
            ASSERT_EQ(cd_norm_sq(cd_mul(x, y)), cd_norm_sq(x) * cd_norm_sq(y));
        }
    }
}

TEST(CommutatorCross, Examples) {
    EXPECT_TRUE(commutator_cross(u(3, 1), u(3, 1)).is_zero());
    const Vector v = commutator_cross(u(3, 1), u(3, 2));
    EXPECT_TRUE(v == basis(7, 3) || v == -basis(7, 3));
    EXPECT_THROW((void)commutator_cross(CDElement::unit(3), u(3, 1)), std::invalid_argument);
}

TEST(CommutatorCross, SatisfiesAxiomsOnImaginaryOctonions) {
    SampleGenerator gen(4);
    for (int s = 0; s < 50; ++s) {
        const auto x = random_imaginary(gen, 3), y = random_imaginary(gen, 3);
        const Vector a = x.imaginary(), b = y.imaginary();
        const Vector ab = commutator_cross(x, y);
        ASSERT_TRUE(commutator_cross(x, x).is_zero());
        ASSERT_EQ(dot(ab, a), q(0));
        ASSERT_EQ(dot(ab, b), q(0));
        ASSERT_EQ(norm_sq(ab), norm_sq(a) * norm_sq(b) - dot(a, b) * dot(a, b));
    }
}

TEST(DerivedTable, MatchesCommutatorAndIsCanonicalShaped) {
    const auto t = derived_table();
    EXPECT_EQ(t.dim(), 7u);
    EXPECT_EQ(t.nonzero().size(), 42u);
    EXPECT_TRUE(t.totally_antisymmetric());
    for (const auto& e : t.nonzero()) EXPECT_TRUE(e.c == q(1) || e.c == q(-1));
    SampleGenerator gen(5);
    for (int s = 0; s < 20; ++s) {
        const auto x = random_imaginary(gen, 3), y = random_imaginary(gen, 3);
        ASSERT_EQ(cross(t, x.imaginary(), y.imaginary()), commutator_cross(x, y));
    }
}

TEST(DerivedTable, PassesFullIdentitySuite) {
    const auto t = derived_table();
    for (const auto& r : verify_all(t, 20, 6)) EXPECT_TRUE(r.holds()) << identity_name(r.id);
    EXPECT_EQ(basis_sum_eq10(t), (SumPair{q(168), q(168)}));
}

TEST(DerivedTable, LowerLevels) {
    // Complex numbers: one imaginary unit, identically zero product.
    const auto c = derived_table(1);
    EXPECT_EQ(c.dim(), 1u);
    EXPECT_TRUE(c.nonzero().empty());
    // Quaternions: the ordinary 3D product up to a signed relabeling.
    const auto h = derived_table(2);
    const auto iso = find_signed_isomorphism(h, canonical_table(CanonicalKind::cross3));
    ASSERT_TRUE(iso.match.has_value());
    EXPECT_EQ(apply(*iso.match, h), canonical_table(CanonicalKind::cross3));
}

TEST(FindIso, IdentityOnCanonical) {
    const auto c7 = canonical_table(CanonicalKind::cross7);
    const auto s = find_iso(c7, c7);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(*s, SignedPermutation::identity(7));
}

TEST(FindIso, DerivedToCanonical) {
    const auto c7 = canonical_table(CanonicalKind::cross7);
    const auto d = derived_table();
    const auto s = find_iso(d, c7);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(verified_pairs(*s, d, c7), 21u);
    EXPECT_EQ(apply(*s, d), c7);
    // Lexicographically first: no earlier permutation/sign pair is a match.
    const auto again = find_signed_isomorphism(d, c7);
    EXPECT_EQ(again.match, s);
    EXPECT_LE(again.candidates_tried, 645120u);
}

TEST(FindIso, NoneForBrokenTable) {
    const auto c7 = canonical_table(CanonicalKind::cross7);
    std::vector<TableEntry> entries(c7.nonzero().begin(), c7.nonzero().end());
    for (auto& x : entries) {
        if ((x.i == 1 && x.j == 2) || (x.i == 2 && x.j == 1)) x.c = -x.c;
    }
    const ProductTable broken(7, entries);
    const auto res = find_signed_isomorphism(c7, broken);
    EXPECT_FALSE(res.match.has_value());
    EXPECT_EQ(res.candidates_tried, 645120u);
    EXPECT_THROW((void)find_iso(c7, canonical_table(CanonicalKind::cross3)), DimensionMismatch);
}

TEST(SignedPermutation, Validation) {
    EXPECT_NO_THROW(SignedPermutation::identity(7).validate());
    EXPECT_THROW((SignedPermutation{{1, 1, 3}, {1, 1, 1}}).validate(), InputError);
    EXPECT_THROW((SignedPermutation{{1, 2, 3}, {1, 0, 1}}).validate(), InputError);
    EXPECT_THROW((SignedPermutation{{1, 2, 4}, {1, 1, 1}}).validate(), InputError);
}

TEST(Hurwitz, CompositionLevelsAreMultiplicative) {
    for (int level = 0; level <= 3; ++level) {
        const auto r = hurwitz_boundary_check(level, random_pairs(level, 50, 7 + level));
        EXPECT_TRUE(r.multiplicative) << level;
        EXPECT_EQ(r.pairs_checked, 50u);
        EXPECT_TRUE(r.matches_hurwitz());
    }
}

TEST(Hurwitz, SedenionsBreakMultiplicativity) {
    const auto r = hurwitz_boundary_check(4, {});
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_FALSE(r.multiplicative);
    EXPECT_TRUE(r.matches_hurwitz());
    const auto& w = *r.witness;
    EXPECT_EQ(w.product_norm_sq, cd_norm_sq(cd_mul(w.x, w.y)));
    EXPECT_EQ(w.norm_product, cd_norm_sq(w.x) * cd_norm_sq(w.y));
    EXPECT_NE(w.product_norm_sq, w.norm_product);
    // Each operand is a sum of two distinct basis elements.
    for (const CDElement* x : {&w.x, &w.y}) {
        int ones = 0;
        for (const auto& c : x->coefficients()) ones += c == q(1);
        EXPECT_EQ(ones, 2);
        EXPECT_EQ(cd_norm_sq(*x), q(2));
    }
}

TEST(Hurwitz, RejectsBadLevel) {
    EXPECT_THROW((void)hurwitz_boundary_check(5, {}), std::invalid_argument);
    EXPECT_THROW((void)hurwitz_boundary_check(2, random_pairs(3, 1, 1)), DimensionMismatch);
}
