#include <random>

#include <gtest/gtest.h>

#include "bridgekit/passes.hpp"
#include "test_support.hpp"

using namespace bridgekit;
using bridgekit::testing::kTrefoil;

namespace {

// Brute force: every choice of cut points splits the cyclic code into arcs;
// an arc is an overpass if it has no Under, an underpass if it has no Over.
// A valid sequence alternates over/under. Returns the fewest overpasses.
int brute_force_overpass_number(const Diagram& d) {
    const std::size_t m = d.size();
    int best = static_cast<int>(m);
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<std::size_t> cuts;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) cuts.push_back(i);
        if (cuts.size() % 2) continue;
        std::vector<int> kinds;  // 0 over, 1 under, -1 invalid
        for (std::size_t c = 0; c < cuts.size(); ++c) {
            const std::size_t from = cuts[c];
            const std::size_t to = c + 1 < cuts.size() ? cuts[c + 1] : cuts[0] + m;
            bool has_over = false, has_under = false;
            for (std::size_t i = from; i < to; ++i)
                (d.entry(i % m).passage == Passage::Over ? has_over : has_under) = true;
            kinds.push_back(has_over && has_under ? -1 : (has_over ? 0 : 1));
        }
        bool ok = true;
        for (std::size_t c = 0; c < kinds.size() && ok; ++c)
            ok = kinds[c] >= 0 && kinds[c] != kinds[(c + 1) % kinds.size()];
        if (ok) best = std::min(best, static_cast<int>(kinds.size() / 2));
    }
    return best;
}

}  // namespace

TEST(PassDecomposition, TrefoilAlternates) {
    const auto dec = pass_decomposition(parse_gauss(kTrefoil));
    EXPECT_EQ(dec.runs.size(), 6u);
    EXPECT_EQ(dec.overpass_count, 3);
    EXPECT_EQ(dec.runs[0].kind, Passage::Over);
    EXPECT_EQ(dec.runs[0].first_entry, 0u);
    EXPECT_EQ(dec.runs[0].crossings, std::vector<CrossingId>{1});
}

TEST(PassDecomposition, RunStartsAfterWrapAround) {
    const auto dec = pass_decomposition(parse_gauss("O1U2U1O2"));
    ASSERT_EQ(dec.runs.size(), 2u);
    EXPECT_EQ(dec.runs[0].first_entry, 3u);
    EXPECT_EQ(dec.runs[0].crossings, (std::vector<CrossingId>{2, 1}));
    EXPECT_EQ(dec.runs[1].crossings, (std::vector<CrossingId>{2, 1}));
}

TEST(PassDecomposition, EmptyDiagramThrows) {
    EXPECT_THROW(pass_decomposition(Diagram{}), Error);
    EXPECT_EQ(overpass_number(Diagram{}), 1);
}

TEST(OverpassNumber, Examples) {
    EXPECT_EQ(overpass_number(parse_gauss(kTrefoil)), 3);
    EXPECT_EQ(overpass_number(parse_gauss("O1O2U1U2")), 1);
    EXPECT_EQ(overpass_number(parse_gauss("O1U1")), 1);
    EXPECT_EQ(overpass_number(bridgekit::testing::table_diagram("4_1")), 4);
}

TEST(OverpassNumber, AlternatingCodeHasNOverpasses) {
    for (int n = 1; n <= 12; ++n) {
        std::string code;
        for (int c = 1; c <= n; ++c) code += "O" + std::to_string(c) + "U" + std::to_string(c);
        EXPECT_EQ(overpass_number(parse_gauss(code)), n);
    }
}

TEST(OverpassNumber, MatchesBruteForce) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 300; ++i) {
        const Diagram d = bridgekit::testing::random_code(rng, 1 + static_cast<int>(rng() % 6));
        EXPECT_EQ(overpass_number(d), brute_force_overpass_number(d)) << serialize(d);
    }
}

TEST(SharedCrossings, KinkSharesItsCrossing) {
    const Diagram d = parse_gauss("O1U1");
    EXPECT_EQ(consecutive_shared_crossings(d), (std::vector<SharedCrossing>{{0, 1}}));
    EXPECT_EQ(minimality_incompatibility_report(d), (MinimalityReport{true, false}));
}

TEST(SharedCrossings, TwoRunsReportedOnce) {
    const Diagram d = parse_gauss("O1O2U2U1");
    EXPECT_EQ(consecutive_shared_crossings(d), (std::vector<SharedCrossing>{{0, 1}, {0, 2}}));
}

TEST(SharedCrossings, TrefoilHasNone) {
    const Diagram d = parse_gauss(kTrefoil);
    EXPECT_TRUE(consecutive_shared_crossings(d).empty());
    EXPECT_EQ(minimality_incompatibility_report(d), (MinimalityReport{false, true}));
}

TEST(SharedCrossings, MatchesDirectScan) {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 300; ++i) {
        const Diagram d = bridgekit::testing::random_code(rng, 1 + static_cast<int>(rng() % 10));
        const auto dec = pass_decomposition(d);
        const std::size_t r = dec.runs.size();
        std::size_t expected = 0;
        for (std::size_t p = 0; p < (r > 2 ? r : 1); ++p) {
            const auto& a = dec.runs[p].crossings;
            const auto& b = dec.runs[(p + 1) % r].crossings;
            for (CrossingId c = 1; c <= d.crossing_count(); ++c)
                expected += std::count(a.begin(), a.end(), c) && std::count(b.begin(), b.end(), c);
        }
        EXPECT_EQ(consecutive_shared_crossings(d).size(), expected) << serialize(d);
    }
}

TEST(MinimalityReport, NeverBothFlags) {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 500; ++i) {
        const Diagram d = bridgekit::testing::random_code(rng, 1 + static_cast<int>(rng() % 14));
        const auto r = minimality_incompatibility_report(d);
        EXPECT_FALSE(r.overpass_minimal_necessary_condition && r.crossing_minimal_necessary_condition)
            << serialize(d);
    }
}

TEST(MinimalityReport, TableDiagramsHaveNoSharedConsecutiveCrossings) {
    for (const auto& d : bridgekit::testing::table_diagrams(10)) {
        if (d.empty()) continue;
        EXPECT_TRUE(minimality_incompatibility_report(d).crossing_minimal_necessary_condition) << d.name();
    }
}
