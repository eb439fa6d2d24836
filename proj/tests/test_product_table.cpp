#include <gtest/gtest.h>

#include "oracle.hpp"
#include "xprod/json_io.hpp"
#include "xprod/product_table.hpp"
#include "xprod/sampling.hpp"

using namespace xprod;

namespace {

const ProductTable& c3() {
    static const ProductTable t = canonical_table(CanonicalKind::cross3);
    return t;
}
const ProductTable& c7() {
    static const ProductTable t = canonical_table(CanonicalKind::cross7);
    return t;
}

Rational q(long p, unsigned long d = 1) { return Rational(p, d); }

} // namespace

TEST(MakeTable, LeviCivitaFromCyclicEntries) {
    const auto t = make_table(3, {{1, 2, 3, q(1)}, {2, 3, 1, q(1)}, {3, 1, 2, q(1)}});
    EXPECT_EQ(t, c3());
    EXPECT_EQ(t.nonzero().size(), 6u);
}

TEST(MakeTable, AcceptsNonAxiomTables) {
    const auto t = make_table(2, {{1, 2, 1, q(1)}});
    EXPECT_EQ(t.constant(1, 2, 1), q(1));
    EXPECT_EQ(t.constant(2, 1, 1), q(-1));
    EXPECT_FALSE(t.totally_antisymmetric());
}

TEST(MakeTable, RejectsContradictions) {
    EXPECT_THROW((void)make_table(3, {{1, 2, 3, q(1)}, {2, 1, 3, q(1)}}), TableConflict);
    EXPECT_THROW((void)make_table(3, {{1, 2, 3, q(1)}, {1, 2, 3, q(2)}}), TableConflict);
    EXPECT_THROW((void)make_table(3, {{1, 2, 3, q(0)}, {2, 1, 3, q(1)}}), TableConflict);
    EXPECT_THROW((void)make_table(3, {{2, 2, 1, q(1)}}), TableConflict);
    EXPECT_THROW((void)make_table(3, {{1, 2, 4, q(1)}}), IndexOutOfRange);
    EXPECT_THROW((void)make_table(3, {{0, 2, 3, q(1)}}), IndexOutOfRange);
    // Consistent duplicates are fine.
    EXPECT_NO_THROW((void)make_table(3, {{1, 2, 3, q(1)}, {2, 1, 3, q(-1)}, {1, 2, 3, q(1)}}));
}

TEST(CanonicalTable, Cross7MatchesListedComponents) {
    for (const auto& [i, j, k] : kCross7Triples) EXPECT_EQ(c7().constant(i, j, k), q(1));
    EXPECT_EQ(c7().constant(1, 2, 3), q(1));
    EXPECT_EQ(c7().constant(2, 1, 3), q(-1));
    EXPECT_TRUE(c7().totally_antisymmetric());
    EXPECT_TRUE(c3().totally_antisymmetric());
}

TEST(CanonicalTable, Cross7AgreesWithOracleEverywhere) {
    const auto o = oracle::cross7();
    EXPECT_EQ(oracle::nonzero_count(o), 42);
    EXPECT_EQ(c7().nonzero().size(), 42u);
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j)
            for (int k = 1; k <= 7; ++k) ASSERT_EQ(c7().constant(i, j, k), q(o(i - 1, j - 1, k - 1)));
    const auto o3 = oracle::cross3();
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) ASSERT_EQ(c3().constant(i, j, k), q(o3(i - 1, j - 1, k - 1)));
}

TEST(StructureConstant, Examples) {
    EXPECT_EQ(structure_constant(c7(), 3, 6, 7), q(1));
    EXPECT_EQ(structure_constant(c7(), 1, 1, 5), q(0));
    EXPECT_EQ(structure_constant(c3(), 2, 1, 3), q(-1));
    EXPECT_THROW((void)structure_constant(c7(), 8, 1, 1), IndexOutOfRange);
}

TEST(Cross, BasisExamples) {
    EXPECT_EQ(cross(c7(), basis(7, 1), basis(7, 2)), basis(7, 3));
    EXPECT_EQ(cross(c7(), basis(7, 2), basis(7, 4)), basis(7, 6));
    EXPECT_EQ(cross(c7(), basis(7, 7), basis(7, 1)), basis(7, 4));
    EXPECT_THROW((void)cross(c7(), basis(3, 1), basis(3, 2)), DimensionMismatch);
}

TEST(Cross, MatchesOracleOnIntegerVectors) {
    SampleGenerator gen(5);
    const auto o = oracle::cross7();
    for (int s = 0; s < 50; ++s) {
        oracle::IVec a(7), b(7);
        std::vector<Rational> ra, rb;
        for (int k = 0; k < 7; ++k) {
            a[k] = static_cast<long>(gen.below(19)) - 9;
            b[k] = static_cast<long>(gen.below(19)) - 9;
            ra.push_back(q(a[k]));
            rb.push_back(q(b[k]));
        }
        const auto expect = oracle::cross(o, a, b);
        const Vector got = cross(c7(), Vector(ra), Vector(rb));
        for (int k = 0; k < 7; ++k) ASSERT_EQ(got(k + 1), q(expect[k]));
    }
}

TEST(Cross, AnticommutativeAndBilinear) {
    SampleGenerator gen(17);
    const ProductTable adhoc = make_table(4, {{1, 2, 3, q(2, 3)}, {3, 4, 1, q(-1)}, {2, 4, 4, q(5)}});
    for (const ProductTable* t : {&c3(), &c7(), &adhoc}) {
        for (int s = 0; s < 30; ++s) {
            const Vector a = gen.vector(t->dim()), a2 = gen.vector(t->dim()), b = gen.vector(t->dim());
            const Rational k = gen.scalar();
            ASSERT_EQ(cross(*t, a, b), -cross(*t, b, a));
            ASSERT_EQ(cross(*t, a, a), Vector(t->dim()));
            ASSERT_EQ(cross(*t, axpy(k, a, a2), b), k * cross(*t, a, b) + cross(*t, a2, b));
        }
    }
}

TEST(Cross, Cross7OrthogonalityAndNormCondition) {
    SampleGenerator gen(23);
    for (int s = 0; s < 50; ++s) {
        const Vector a = gen.vector(7), b = gen.vector(7);
        const Vector ab = cross(c7(), a, b);
        ASSERT_EQ(dot(ab, a), q(0));
        ASSERT_EQ(dot(ab, b), q(0));
        const Rational d = dot(a, b);
        ASSERT_EQ(norm_sq(ab), norm_sq(a) * norm_sq(b) - d * d);
    }
}

TEST(TableJson, CanonicalTextIsStable) {
    const std::string text = json::dump_table(c3());
    EXPECT_EQ(text,
              "{\"dimension\": 3, \"entries\": [\n"
              "  {\"i\":1,\"j\":2,\"k\":3,\"c\":\"1\"},\n"
              "  {\"i\":1,\"j\":3,\"k\":2,\"c\":\"-1\"},\n"
              "  {\"i\":2,\"j\":3,\"k\":1,\"c\":\"1\"}\n"
              "]}\n");
    EXPECT_EQ(json::dump_table(ProductTable(2)), "{\"dimension\": 2, \"entries\": []}\n");
}

TEST(TableJson, RoundTripIsFixedPoint) {
    SampleGenerator gen(29);
    std::vector<ProductTable> tables{c3(), c7(), ProductTable(1)};
    for (int s = 0; s < 20; ++s) {
        const std::size_t n = 2 + gen.below(5);
        std::vector<TableEntry> entries;
        for (int e = 0; e < 6; ++e) {
            const std::size_t i = 1 + gen.below(n), j = 1 + gen.below(n), k = 1 + gen.below(n);
            if (i == j) continue;
            entries.push_back({i, j, k, gen.scalar()});
        }
        try {
            tables.emplace_back(n, entries);
        } catch (const TableConflict&) {
        }
    }
    for (const auto& t : tables) {
        const std::string once = json::dump_table(t);
        const ProductTable back = json::parse_table(once);
        ASSERT_EQ(back, t);
        ASSERT_EQ(json::dump_table(back), once);
    }
}

TEST(TableJson, AcceptsEitherOrientationAndUnsortedInput) {
    const auto t = json::parse_table(
        R"({"entries":[{"i":3,"j":1,"k":2,"c":"1"},{"i":2,"j":3,"k":1,"c":"2/2"},{"i":1,"j":2,"k":3,"c":"1"}],"dimension":3})");
    EXPECT_EQ(t, c3());
}

TEST(TableJson, SchemaViolations) {
    const char* bad[] = {
        "[]",
        R"({"dimension":0,"entries":[]})",
        R"({"dimension":-3,"entries":[]})",
        R"({"dimension":3})",
        R"({"dimension":3,"entries":{}})",
        R"({"dimension":3,"entries":[{"i":1,"j":2,"k":4,"c":"1"}]})",
        R"({"dimension":3,"entries":[{"i":1,"j":2,"k":3,"c":1}]})",
        R"({"dimension":3,"entries":[{"i":1,"j":2,"k":3,"c":"1/0"}]})",
        R"({"dimension":3,"entries":[{"i":1,"j":2,"k":3}]})",
        R"({"dimension":3,"entries":[{"i":1,"j":2,"k":3,"c":"1","x":0}]})",
        R"({"dimension":3,"entries":[],"extra":1})",
        R"({"dimension":3,"entries":[{"i":1,"j":2,"k":3,"c":"1"},{"i":2,"j":1,"k":3,"c":"1"}]})",
        "{not json",
    };
    for (const char* text : bad) EXPECT_THROW((void)json::parse_table(text), InputError) << text;
}
