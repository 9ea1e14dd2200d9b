#include <random>

#include <gtest/gtest.h>

#include "bridgekit/sum_decomp.hpp"
#include "bridgekit/wirtinger.hpp"
#include "test_support.hpp"

using namespace bridgekit;
using bridgekit::testing::kTrefoil;
using bridgekit::testing::table_diagram;

TEST(WirtingerNumber, Trefoil) {
    const auto out = wirtinger_number(parse_gauss(kTrefoil));
    EXPECT_TRUE(out.exact());
    EXPECT_EQ(out.k, 2);
    ASSERT_TRUE(out.certificate);
    EXPECT_EQ(out.certificate->seeds, (std::vector<StrandId>{1, 2}));
}

TEST(WirtingerNumber, EightSeventeen) {
    const Diagram d = table_diagram("8_17");
    const auto out = wirtinger_number(d);
    EXPECT_TRUE(out.exact());
    EXPECT_EQ(out.k, 3);
    EXPECT_EQ(wirtinger_oracle(d), 3);
    EXPECT_TRUE(verify_certificate(d, *out.certificate));
}

TEST(WirtingerNumber, DegenerateDiagrams) {
    EXPECT_EQ(wirtinger_number(Diagram{}).k, 1);
    EXPECT_EQ(wirtinger_number(parse_gauss("O1U1")).k, 1);
    EXPECT_EQ(wirtinger_oracle(Diagram{}), 1);
    EXPECT_EQ(wirtinger_oracle(parse_gauss("O1U1")), 1);
    EXPECT_TRUE(verify_certificate(Diagram{}, *wirtinger_number(Diagram{}).certificate));
}

TEST(WirtingerNumber, FigureEight) {
    const Diagram d = table_diagram("4_1");
    EXPECT_EQ(wirtinger_oracle(d), 2);
    EXPECT_EQ(wirtinger_number(d).k, 2);
}

TEST(WirtingerNumber, TrefoilSum) {
    const Diagram t = parse_gauss(kTrefoil);
    const Diagram sum = connected_sum(t, t);
    EXPECT_EQ(wirtinger_oracle(sum), 3);
    EXPECT_EQ(wirtinger_number(sum).k, 3);
}

TEST(WirtingerNumber, MatchesOracleOnTable) {
    for (const auto& d : bridgekit::testing::table_diagrams(8)) {
        const auto out = wirtinger_number(d);
        ASSERT_TRUE(out.exact()) << d.name();
        EXPECT_EQ(out.k, wirtinger_oracle(d)) << d.name();
        EXPECT_TRUE(verify_certificate(d, *out.certificate)) << d.name();
    }
}

TEST(WirtingerNumber, MatchesOracleOnRandomCodes) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
        const Diagram d = bridgekit::testing::random_code(rng, 1 + static_cast<int>(rng() % 7));
        const auto out = wirtinger_number(d);
        EXPECT_EQ(out.k, wirtinger_oracle(d)) << serialize(d);
        EXPECT_TRUE(verify_certificate(d, *out.certificate)) << serialize(d);
    }
}

TEST(WirtingerNumber, BoundedByStrandCount) {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 200; ++i) {
        const Diagram d = bridgekit::testing::random_code(rng, 1 + static_cast<int>(rng() % 12));
        const int k = wirtinger_number(d).k;
        EXPECT_GE(k, 1);
        EXPECT_LE(k, std::max(1, d.strand_count()));
    }
}

TEST(WirtingerNumber, InvariantUnderCodeSymmetry) {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 200; ++i) {
        const Diagram d = bridgekit::testing::random_code(rng, 2 + static_cast<int>(rng() % 9));
        const Diagram e = bridgekit::testing::random_symmetry(d, rng);
        EXPECT_EQ(wirtinger_number(d).k, wirtinger_number(e).k) << serialize(d) << " vs " << serialize(e);
    }
}

TEST(WirtingerNumber, InvariantUnderMirror) {
    for (const auto& d : bridgekit::testing::table_diagrams(9)) {
        EXPECT_EQ(wirtinger_number(d).k, wirtinger_number(bridgekit::testing::mirror(d)).k) << d.name();
    }
}

TEST(WirtingerNumber, ParallelAgreesWithSerial) {
    SearchOptions parallel;
    parallel.parallel = true;
    parallel.threads = 4;
    std::mt19937_64 rng(34);
    std::vector<Diagram> corpus = bridgekit::testing::table_diagrams(9);
    for (int i = 0; i < 100; ++i)
        corpus.push_back(bridgekit::testing::random_code(rng, 2 + static_cast<int>(rng() % 12)));
    for (const auto& d : corpus) {
        const auto a = wirtinger_number(d);
        const auto b = wirtinger_number(d, parallel);
        EXPECT_EQ(a.k, b.k) << serialize(d);
        ASSERT_TRUE(b.certificate);
        EXPECT_TRUE(verify_certificate(d, *b.certificate)) << serialize(d);
    }
}

TEST(WirtingerNumber, MaxKGivesLowerBound) {
    SearchOptions opts;
    opts.max_k = 2;
    const auto out = wirtinger_number(table_diagram("8_17"), opts);
    EXPECT_FALSE(out.exact());
    EXPECT_EQ(out.k, 3);
    EXPECT_FALSE(out.certificate);
}

TEST(WirtingerNumber, TimeLimitGivesLowerBound) {
    std::mt19937_64 rng(35);
    const Diagram d = bridgekit::testing::random_prime_code(rng, 60);
    SearchOptions opts;
    opts.time_limit = std::chrono::milliseconds(1);
    const auto out = wirtinger_number(d, opts);
    if (!out.exact()) {
        EXPECT_FALSE(out.certificate);
        EXPECT_GE(out.k, 1);
        EXPECT_LT(out.elapsed, std::chrono::seconds(5));
    }
}

TEST(WirtingerOracle, RejectsLargeDiagrams) {
    try {
        wirtinger_oracle(table_diagram("10_1"));
        SUCCEED();
    } catch (...) {
        FAIL() << "ten crossings are within the default bound";
    }
    try {
        wirtinger_oracle(table_diagram("8_17"), 7);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OracleBoundExceeded);
    }
}
