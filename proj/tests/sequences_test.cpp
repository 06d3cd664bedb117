#include <vector>

#include <gtest/gtest.h>

#include "lattice_succ/sequences.hpp"

using namespace lattice_succ;

TEST(VerifyFgAtConvergents, TwoThreeThroughIndexFour)
{
    ConvergentTable table(validate_pair(2, 3));
    const auto report = verify_fg_at_convergents(table, 4);
    EXPECT_TRUE(report.passed) << report.failure;
    EXPECT_GT(report.checks, 0u);
    // Spot values used by the identities.
    EXPECT_EQ(upper_sequence(table.pair(), 3), table.denominator(2) + table.denominator(3));
    EXPECT_EQ(lower_sequence(table.pair(), 2), table.denominator(1) + table.denominator(2));
    EXPECT_EQ(upper_sequence(table.pair(), 1), table.denominator(0) + table.denominator(1));
}

TEST(VerifyFgAtConvergents, VacuousAtIndexZero)
{
    ConvergentTable table(validate_pair(2, 3));
    const auto report = verify_fg_at_convergents(table, 0);
    EXPECT_TRUE(report.passed);
    EXPECT_EQ(report.checks, 0u);
}

TEST(VerifyFgAtConvergents, SeveralPairs)
{
    for (auto [p1, p2] : {std::pair{2, 5}, {3, 5}, {6, 10}, {2, 12}}) {
        ConvergentTable table(validate_pair(p1, p2));
        const auto report = verify_fg_at_convergents(table, 9);
        EXPECT_TRUE(report.passed) << p1 << "," << p2 << ": " << report.failure;
    }
}

TEST(FracPartRecord, PositiveBelowAlphaAndSumToAlpha)
{
    const auto pair = validate_pair(2, 3);
    const AffineForm zero{0, 0}, alpha{1, 0};
    for (Exponent n = 1; n <= 500; ++n) {
        const auto rec = frac_part_record(pair, n);
        EXPECT_TRUE(compare_affine(pair, rec.z, zero) > 0);
        EXPECT_TRUE(compare_affine(pair, rec.y, zero) > 0);
        EXPECT_TRUE(compare_affine(pair, rec.z, alpha) < 0);
        EXPECT_TRUE(compare_affine(pair, rec.y, alpha) < 0);
        EXPECT_EQ(rec.z + rec.y, alpha);
    }
}

TEST(MinimalFractionalSubsequences, Examples)
{
    const auto pair = validate_pair(2, 3);
    const auto r45 = minimal_fractional_subsequences(pair, 45);
    EXPECT_EQ(r45.upper, (std::vector<Exponent>{1, 3, 5, 17, 29, 41}));
    EXPECT_EQ(r45.lower, (std::vector<Exponent>{1, 2, 7, 12}));
    const auto r1 = minimal_fractional_subsequences(validate_pair(5, 7), 1);
    EXPECT_EQ(r1.upper, (std::vector<Exponent>{1}));
    EXPECT_EQ(r1.lower, (std::vector<Exponent>{1}));
    const auto r2 = minimal_fractional_subsequences(pair, 2);
    EXPECT_EQ(r2.upper, (std::vector<Exponent>{1}));
    EXPECT_EQ(r2.lower, (std::vector<Exponent>{1, 2}));
    EXPECT_THROW(minimal_fractional_subsequences(pair, 0), std::invalid_argument);
}

TEST(MinimalFractionalSubsequences, TwoFiveFromOracle)
{
    const auto r = minimal_fractional_subsequences(validate_pair(2, 5), 30);
    EXPECT_EQ(r.upper, (std::vector<Exponent>{1, 2, 3}));
    EXPECT_EQ(r.lower, (std::vector<Exponent>{1, 4, 7, 10, 13, 16, 19, 22, 25, 28}));
}

TEST(RecordTheorem, ChainsMatchScan)
{
    for (auto [p1, p2] : {std::pair{2, 3}, {2, 5}, {3, 5}, {6, 10}, {2, 12}, {5, 7}}) {
        ConvergentTable table(validate_pair(p1, p2));
        for (Exponent N : {1, 2, 10, 45, 700}) {
            const auto report = verify_record_theorem(table, N);
            EXPECT_TRUE(report.passed) << p1 << "," << p2 << " N=" << N << ": " << report.failure;
        }
    }
}

TEST(RecordTheorem, PredictedChainsTwoThree)
{
    ConvergentTable table(validate_pair(2, 3));
    const auto chains = predicted_record_chains(table, 45);
    EXPECT_EQ(chains.upper, (std::vector<Exponent>{1, 3, 5, 17, 29, 41}));
    EXPECT_EQ(chains.lower, (std::vector<Exponent>{1, 2, 7, 12}));
}

TEST(MonotoneChains, PassThroughIndexFive)
{
    ConvergentTable table(validate_pair(2, 3));
    const auto report = verify_monotone_fractional_chains(table, 5);
    EXPECT_TRUE(report.passed) << report.failure;
    EXPECT_GT(report.checks, 0u);
}

TEST(MonotoneChains, DeepPass)
{
    for (auto [p1, p2] : {std::pair{2, 3}, {2, 5}, {6, 10}}) {
        ConvergentTable table(validate_pair(p1, p2));
        const auto report = verify_monotone_fractional_chains(table, 14);
        EXPECT_TRUE(report.passed) << report.failure;
    }
}

TEST(MonotoneChains, LengthOneIsVacuous)
{
    const auto pair = validate_pair(2, 3);
    const std::vector<AffineForm> single{{1, 0}};
    const auto report = check_strictly_decreasing(pair, single);
    EXPECT_TRUE(report.passed);
    EXPECT_EQ(report.checks, 0u);
}

TEST(MonotoneChains, SwappedLinksAreReported)
{
    ConvergentTable table(validate_pair(2, 3));
    auto chain = upper_fraction_chain(table, 8);
    ASSERT_GE(chain.size(), 5u);
    std::swap(chain[2], chain[3]);
    const auto report = check_strictly_decreasing(table.pair(), chain);
    EXPECT_FALSE(report.passed);
    ASSERT_TRUE(report.failing_index.has_value());
    EXPECT_EQ(*report.failing_index, 2u);

    auto lower = lower_fraction_chain(table, 8);
    ASSERT_GE(lower.size(), 3u);
    std::swap(lower[0], lower[1]);
    const auto lower_report = check_strictly_decreasing(table.pair(), lower);
    EXPECT_FALSE(lower_report.passed);
    EXPECT_EQ(lower_report.failing_index, 0u);
}
