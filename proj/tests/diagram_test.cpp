#include <random>

#include <gtest/gtest.h>

#include "bridgekit/diagram.hpp"
#include "test_support.hpp"

using namespace bridgekit;
using bridgekit::testing::kTrefoil;

namespace {

ErrorCode parse_error(std::string_view text) {
    try {
        parse_gauss(text);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error for " << text;
    return ErrorCode::EmptyDiagram;
}

}  // namespace

TEST(ParseGauss, Trefoil) {
    const Diagram d = parse_gauss(kTrefoil);
    EXPECT_EQ(d.crossing_count(), 3);
    ASSERT_EQ(d.size(), 6u);
    EXPECT_EQ(d.entry(0), (GaussEntry{1, Passage::Over, Sign::Plus}));
    EXPECT_EQ(d.entry(5), (GaussEntry{3, Passage::Under, Sign::Plus}));
}

TEST(ParseGauss, OneKinkUnknot) {
    const Diagram d = parse_gauss("O1U1");
    EXPECT_EQ(d.crossing_count(), 1);
    EXPECT_EQ(d.size(), 2u);
}

TEST(ParseGauss, EmptyInputIsZeroCrossingDiagram) {
    EXPECT_TRUE(parse_gauss("").empty());
    EXPECT_TRUE(parse_gauss("  ").empty());
    EXPECT_TRUE(parse_gauss("[]").empty());
}

TEST(ParseGauss, SeparatorsAndCase) {
    const Diagram a = parse_gauss("o1, u2 , O3\tU1,o2 u3");
    EXPECT_EQ(serialize(a), "O1U2O3U1O2U3");
}

TEST(ParseGauss, Errors) {
    EXPECT_EQ(parse_error("O1O2U1"), ErrorCode::UnpairedCrossing);
    EXPECT_EQ(parse_error("O1O1"), ErrorCode::DuplicatePassage);
    EXPECT_EQ(parse_error("U2U2O2"), ErrorCode::DuplicatePassage);
    EXPECT_EQ(parse_error("X1U1"), ErrorCode::MalformedToken);
    EXPECT_EQ(parse_error("O U1"), ErrorCode::MalformedToken);
    EXPECT_EQ(parse_error("O0U0"), ErrorCode::MalformedToken);
    EXPECT_EQ(parse_error("O1*U1"), ErrorCode::MalformedToken);
    EXPECT_EQ(parse_error("O99999999999U1"), ErrorCode::MalformedToken);
}

TEST(ParseGauss, SparseIdsRenumberedByFirstOccurrence) {
    const Diagram d = parse_gauss("O7U3O12U7O3U12");
    EXPECT_EQ(serialize(d), "O1U2O3U1O2U3");
}

TEST(ParseGauss, DenseIdsKeepTheirLabels) {
    const Diagram d = parse_gauss("O2U1O3U2O1U3");
    EXPECT_EQ(serialize(d), "O2U1O3U2O1U3");
}

TEST(StrandTable, Trefoil) {
    const Diagram d = parse_gauss(kTrefoil);
    const auto& strands = strand_table(d);
    ASSERT_EQ(strands.size(), 3u);
    // Strand 1 runs through the end of the code: (O1), then (O3), then (O2).
    EXPECT_EQ(strands[0].over_entries, std::vector<std::size_t>{0});
    EXPECT_EQ(strands[1].over_entries, std::vector<std::size_t>{2});
    EXPECT_EQ(strands[2].over_entries, std::vector<std::size_t>{4});
}

TEST(StrandTable, DegenerateDiagrams) {
    const Diagram kink = parse_gauss("O1U1");
    ASSERT_EQ(kink.strand_count(), 1);
    EXPECT_EQ(kink.strand(1).over_entries, std::vector<std::size_t>{0});

    const Diagram round = parse_gauss("");
    ASSERT_EQ(round.strand_count(), 1);
    EXPECT_EQ(round.strand(1).length, 0u);
}

TEST(StrandTable, StrandMayHaveEmptySpan) {
    const Diagram d = parse_gauss("O1O2U1U2");
    ASSERT_EQ(d.strand_count(), 2);
    EXPECT_EQ(d.strand(1).length, 2u);  // O1 O2, after the final U2
    EXPECT_EQ(d.strand(2).length, 0u);  // between U1 and U2
}

TEST(CrossingTable, Trefoil) {
    const Diagram d = parse_gauss(kTrefoil);
    const auto& xs = crossing_table(d);
    ASSERT_EQ(xs.size(), 3u);
    EXPECT_EQ(xs[0], (Crossing{1, 1, {2, 3}}));
    EXPECT_EQ(xs[1], (Crossing{2, 3, {1, 2}}));
    EXPECT_EQ(xs[2], (Crossing{3, 2, {3, 1}}));
}

TEST(CrossingTable, KinkIsSelfAdjacent) {
    const Diagram d = parse_gauss("O1U1");
    EXPECT_EQ(crossing_table(d)[0], (Crossing{1, 1, {1, 1}}));
}

TEST(CrossingTable, EmptyDiagramThrows) {
    try {
        crossing_table(Diagram{});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyDiagram);
    }
}

TEST(CrossingTable, AlternatingCodesHaveOneOverPerStrand) {
    for (const auto& d : bridgekit::testing::table_diagrams(10)) {
        bool alternating = true;
        for (std::size_t i = 0; i < d.size(); ++i)
            alternating &= d.entry(i).passage != d.entry((i + 1) % d.size()).passage;
        if (!alternating || d.empty()) continue;
        for (const auto& s : d.strands()) EXPECT_EQ(s.over_entries.size(), 1u) << d.name();
    }
}

TEST(CanonicalForm, TrefoilSymmetries) {
    const Diagram d = parse_gauss(kTrefoil);
    const Diagram rotated = parse_gauss("O3U1O2U3O1U2");
    const Diagram reversed = parse_gauss("U3O2U1O3U2O1");
    EXPECT_EQ(serialize(canonical_form(d)), "O1U2O3U1O2U3");
    EXPECT_EQ(canonical_form(rotated), canonical_form(d));
    EXPECT_EQ(canonical_form(reversed), canonical_form(d));
}

TEST(CanonicalForm, DistinguishesTrefoilAndFigureEight) {
    EXPECT_NE(canonical_form(parse_gauss(kTrefoil)),
              canonical_form(bridgekit::testing::table_diagram("4_1")));
}

TEST(Serialize, Examples) {
    EXPECT_EQ(serialize(parse_gauss(kTrefoil)), "O1+U2+O3+U1+O2+U3+");
    EXPECT_EQ(serialize(parse_gauss("o1-,u1+")), "O1-U1+");
    EXPECT_EQ(serialize(Diagram{}), "");
    EXPECT_EQ(serialize_for_file(Diagram{}), "[]");
}

// Property: parse(serialize(D)) == D for table and random codes.
TEST(DiagramProperties, SerializeRoundTrip) {
    std::mt19937_64 rng(11);
    std::vector<Diagram> corpus = bridgekit::testing::table_diagrams(10);
    for (int i = 0; i < 300; ++i) {
        corpus.push_back(bridgekit::testing::random_symmetry(
            bridgekit::testing::random_code(rng, 1 + static_cast<int>(rng() % 12)), rng));
    }
    for (const auto& d : corpus) {
        EXPECT_EQ(parse_gauss(serialize(d)), d);
        EXPECT_EQ(parse_gauss(serialize_for_file(d)), d);
    }
}

// Property: n strands, n crossings, each strand is an endpoint of exactly two
// under-passages counted with multiplicity.
TEST(DiagramProperties, TableSizes) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 300; ++i) {
        const Diagram d = bridgekit::testing::random_code(rng, 1 + static_cast<int>(rng() % 15));
        const int n = d.crossing_count();
        ASSERT_EQ(d.strand_count(), n);
        ASSERT_EQ(static_cast<int>(d.crossings().size()), n);
        std::vector<int> endpoints(static_cast<std::size_t>(n) + 1, 0);
        std::size_t overs = 0;
        for (const auto& x : d.crossings()) {
            ++endpoints[static_cast<std::size_t>(x.under_pair.first)];
            ++endpoints[static_cast<std::size_t>(x.under_pair.second)];
        }
        for (const auto& s : d.strands()) overs += s.over_entries.size();
        EXPECT_EQ(overs, static_cast<std::size_t>(n));
        for (int s = 1; s <= n; ++s) EXPECT_EQ(endpoints[static_cast<std::size_t>(s)], 2);
    }
}

TEST(DiagramProperties, CanonicalFormInvariantUnderSymmetry) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        const Diagram d = bridgekit::testing::random_code(rng, 1 + static_cast<int>(rng() % 10));
        const Diagram canon = canonical_form(d);
        EXPECT_EQ(canonical_form(canon), canon);
        EXPECT_EQ(canonical_form(bridgekit::testing::random_symmetry(d, rng)), canon);
    }
}
