#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "lattice_succ/cf_engine.hpp"

using namespace lattice_succ;

namespace {

/// One-step mediant walk: a_{m+1} found by advancing t one at a time.
std::vector<Exponent> slow_quotients(const GeneratorPair& pair, std::size_t depth)
{
    std::vector<Exponent> a{0};
    Exponent hp = 1, kp = 0, h = 0, k = 1;
    for (std::size_t m = 0; m < depth; ++m) {
        const bool target_below = (m + 1) % 2 == 0;
        Exponent t = 0;
        while ((compare_fraction(pair, hp + (t + 1) * h, kp + (t + 1) * k) < 0) == target_below) ++t;
        a.push_back(t);
        const Exponent hn = hp + t * h, kn = kp + t * k;
        hp = h; kp = k; h = hn; k = kn;
    }
    return a;
}

void expect_table_invariants(ConvergentTable& table)
{
    const auto& a = table.quotients();
    const auto& h = table.numerators();
    const auto& k = table.denominators();
    for (std::size_t i = 0; i <= table.depth(); ++i) {
        EXPECT_EQ(std::gcd(h[i], k[i]), 1) << i;
        EXPECT_EQ(compare_fraction(table.pair(), h[i], k[i]) < 0, i % 2 == 0) << i;
        if (i + 1 <= table.depth()) {
            const Exponent det = h[i] * k[i + 1] - k[i] * h[i + 1];
            EXPECT_TRUE(det == 1 || det == -1) << i;
        }
        if (i + 2 <= table.depth()) {
            EXPECT_EQ(h[i + 2], a[i + 2] * h[i + 1] + h[i]);
            EXPECT_EQ(k[i + 2], a[i + 2] * k[i + 1] + k[i]);
        }
        if (i >= 1) {
            EXPECT_GE(a[i], 1);
        }
    }
}

} // namespace

TEST(ConvergentTable, SeedRow)
{
    ConvergentTable table(validate_pair(5, 7));
    EXPECT_EQ(table.depth(), 0u);
    EXPECT_EQ(table.numerator(0), 0);
    EXPECT_EQ(table.denominator(0), 1);
    EXPECT_THROW(table.numerator(1), IndexBeyondTable);
}

TEST(ConvergentTable, TwoThreeDepthEight)
{
    ConvergentTable table(validate_pair(2, 3));
    table.extend_to(8);
    EXPECT_EQ(table.quotients(), (std::vector<Exponent>{0, 1, 1, 1, 2, 2, 3, 1, 5}));
    EXPECT_EQ(table.numerators(), (std::vector<Exponent>{0, 1, 1, 2, 5, 12, 41, 53, 306}));
    EXPECT_EQ(table.denominators(), (std::vector<Exponent>{1, 1, 2, 3, 8, 19, 65, 84, 485}));
    EXPECT_EQ(table.numerator(4) * table.denominator(5) - table.denominator(4) * table.numerator(5), -1);
}

TEST(ConvergentTable, OtherPairsFromOracle)
{
    struct Case {
        std::uint64_t p1, p2;
        std::vector<Exponent> quotients;
    };
    // Frozen from tests/oracles/derive_expected.py.
    const Case cases[] = {
        {2, 5, {0, 2, 3, 9, 2, 2, 4, 6, 2, 1, 1}},
        {3, 5, {0, 1, 2, 6, 1, 1, 1, 3, 7, 3, 1}},
        {2, 12, {0, 3, 1, 1, 2, 2, 3, 1, 5, 2, 23}},
        {6, 10, {0, 1, 3, 1, 1, 32, 1, 1, 278, 1, 1}},
    };
    for (const auto& c : cases) {
        ConvergentTable table(validate_pair(c.p1, c.p2));
        table.extend_to(10);
        EXPECT_EQ(table.quotients(), c.quotients) << c.p1 << "," << c.p2;
    }
}

TEST(ConvergentTable, InvariantsAcrossPairsAndDepths)
{
    for (auto [p1, p2] : {std::pair{2, 3}, {2, 5}, {3, 5}, {2, 12}, {6, 10}, {5, 7}, {10, 11}}) {
        ConvergentTable table(validate_pair(p1, p2));
        table.extend_until_denominator_exceeds(1'000'000);
        expect_table_invariants(table);
    }
}

TEST(ConvergentTable, DoublingSearchMatchesSlowWalk)
{
    for (auto [p1, p2] : {std::pair{2, 3}, {2, 5}, {3, 5}, {6, 10}, {3, 7}}) {
        const auto pair = validate_pair(p1, p2);
        ConvergentTable table(pair);
        table.extend_to(12);
        EXPECT_EQ(table.quotients(), slow_quotients(pair, 12)) << p1 << "," << p2;
    }
}

TEST(ConvergentTable, BudgetExceededLeavesTableIntact)
{
    ConvergentTable table(validate_pair(2, 3).with_bit_budget(200));
    EXPECT_THROW(table.extend_to(40), BudgetExceeded);
    const std::size_t reached = table.depth();
    EXPECT_GE(reached, 6u);
    expect_table_invariants(table);
    EXPECT_THROW(table.extend_to(40), BudgetExceeded);
    EXPECT_EQ(table.depth(), reached);
}

TEST(SecondaryConvergents, Examples)
{
    ConvergentTable table(validate_pair(2, 3));
    table.extend_to(8);
    EXPECT_EQ(secondary_convergents(table, 2), (std::vector<SecondaryConvergent>{{2, 1, 3, 5}}));
    EXPECT_TRUE(secondary_convergents(table, 1).empty());
    EXPECT_EQ(secondary_convergents(table, 4),
              (std::vector<SecondaryConvergent>{{4, 1, 17, 27}, {4, 2, 29, 46}}));
    EXPECT_THROW(secondary_convergents(table, 7), IndexBeyondTable);
}

TEST(SecondaryConvergents, LieBetweenOnCorrectSide)
{
    for (auto [p1, p2] : {std::pair{2, 3}, {2, 5}, {6, 10}}) {
        ConvergentTable table(validate_pair(p1, p2));
        table.extend_to(12);
        for (std::size_t level = 0; level + 2 <= 12; ++level) {
            const BigInt lo_h = table.numerator(level), lo_k = table.denominator(level);
            const BigInt hi_h = table.numerator(level + 2), hi_k = table.denominator(level + 2);
            BigInt prev_h = lo_h, prev_k = lo_k;
            for (const auto& s : secondary_convergents(table, level)) {
                EXPECT_EQ(compare_fraction(table.pair(), s.numerator, s.denominator) < 0, level % 2 == 0);
                EXPECT_EQ(std::gcd(s.numerator, s.denominator), 1);
                const BigInt sh = s.numerator, sk = s.denominator;
                // Monotone chain moving from convergent level toward level+2.
                if (level % 2 == 0) {
                    EXPECT_LT(prev_h * sk, sh * prev_k);
                    EXPECT_LT(sh * hi_k, hi_h * sk);
                } else {
                    EXPECT_GT(prev_h * sk, sh * prev_k);
                    EXPECT_GT(sh * hi_k, hi_h * sk);
                }
                prev_h = sh;
                prev_k = sk;
            }
        }
    }
}
