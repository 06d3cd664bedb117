#include <map>
#include <set>

#include <gtest/gtest.h>

#include "lattice_succ/oracle.hpp"
#include "lattice_succ/successor.hpp"

using namespace lattice_succ;

TEST(Locate, Examples)
{
    ConvergentTable table(validate_pair(2, 3));
    EXPECT_EQ(locate(table, {0, 0}), (RectangleId{Family::P, 0, 0, 0, 0}));
    EXPECT_EQ(locate(table, {3, 2}), (RectangleId{Family::A, 2, 0, 0, 2}));
    EXPECT_EQ(locate(table, {4, 0}), (RectangleId{Family::A, 2, 0, 1, 0}));
}

TEST(Locate, ReconstructsEveryPoint)
{
    for (auto [p1, p2] : {std::pair{2, 3}, {2, 5}, {6, 10}, {2, 12}}) {
        ConvergentTable table(validate_pair(p1, p2));
        for (Exponent i = 0; i < 120; ++i) {
            for (Exponent j = 0; j < 120; ++j) {
                const GridPoint p{i, j};
                const RectangleId id = locate(table, p);
                ASSERT_EQ(to_point(table, id), p);
                if (id.family == Family::A) {
                    EXPECT_GE(id.level, 1u);
                    EXPECT_LT(id.band, table.quotient(2 * id.level + 1));
                    EXPECT_LT(id.offset_r, table.denominator(2 * id.level));
                    EXPECT_LT(id.offset_s, table.numerator(2 * id.level));
                } else {
                    EXPECT_LT(id.band, table.quotient(2 * id.level + 2));
                    EXPECT_LT(id.offset_r, table.denominator(2 * id.level + 1));
                    EXPECT_LT(id.offset_s, table.numerator(2 * id.level + 1));
                }
                if (p != GridPoint{0, 0}) {
                    ASSERT_EQ(to_point(table, locate_translated(table, p)), p);
                }
            }
        }
    }
}

TEST(Next, Examples)
{
    ConvergentTable table(validate_pair(2, 3));
    EXPECT_EQ(next(table, {0, 0}), (GridPoint{1, 0}));
    EXPECT_EQ(next(table, {3, 2}), (GridPoint{0, 4}));
    EXPECT_EQ(next(table, {4, 0}), (GridPoint{1, 2}));
    EXPECT_EQ(next(table, {1, 0}), (GridPoint{0, 1}));
    EXPECT_EQ(next(table, {2, 1}), (GridPoint{4, 0}));
}

TEST(Prev, Examples)
{
    ConvergentTable table(validate_pair(2, 3));
    EXPECT_THROW(prev(table, {0, 0}), NoPredecessor);
    EXPECT_EQ(prev(table, {1, 0}), (GridPoint{0, 0}));
    EXPECT_EQ(prev(table, {0, 4}), (GridPoint{3, 2}));
}

TEST(Value, Examples)
{
    const auto pair = validate_pair(2, 3);
    EXPECT_EQ(value(pair, {0, 0}), 1);
    EXPECT_EQ(value(pair, {3, 2}), 72);
    EXPECT_EQ(value(pair, {7, 11}), BigInt("22674816"));
    EXPECT_THROW(value(pair.with_bit_budget(100), {200, 0}), BudgetExceeded);
}

TEST(Next, OrderPropertyWithoutOracle)
{
    // value(next(p)) > value(p) and nothing in the window lies strictly between.
    for (auto [p1, p2] : {std::pair{2, 3}, {3, 5}, {6, 10}}) {
        const auto pair = validate_pair(p1, p2);
        ConvergentTable table(pair);
        constexpr Exponent W = 30;
        std::vector<std::pair<BigInt, GridPoint>> window;
        for (Exponent i = 0; i < W; ++i)
            for (Exponent j = 0; j < W; ++j) window.push_back({value(pair, {i, j}), {i, j}});
        for (const auto& [v, p] : window) {
            const GridPoint q = next(table, p);
            const BigInt vq = value(pair, q);
            ASSERT_GT(vq, v);
            for (const auto& [w, r] : window) ASSERT_FALSE(v < w && w < vq) << p << " -> " << q << " skips " << r;
        }
    }
}

TEST(Next, InjectiveAndInverse)
{
    for (auto [p1, p2] : {std::pair{2, 3}, {2, 5}, {3, 5}}) {
        ConvergentTable table(validate_pair(p1, p2));
        std::set<GridPoint> images;
        for (Exponent i = 0; i < 80; ++i) {
            for (Exponent j = 0; j < 80; ++j) {
                const GridPoint p{i, j};
                const GridPoint q = next(table, p);
                EXPECT_NE(q, (GridPoint{0, 0}));
                EXPECT_TRUE(images.insert(q).second) << "collision at " << q;
                EXPECT_EQ(prev(table, q), p);
                if (p != GridPoint{0, 0}) {
                    EXPECT_EQ(next(table, prev(table, p)), p);
                }
            }
        }
    }
}

TEST(Next, AgreesWithEnumeration)
{
    for (auto [p1, p2] : {std::pair{2, 3}, {2, 5}, {3, 5}, {2, 12}, {6, 10}, {5, 6}}) {
        const auto pair = validate_pair(p1, p2);
        ConvergentTable table(pair);
        const auto elems = enumerate(pair, 3000);
        for (std::size_t n = 0; n + 1 < elems.size(); ++n) {
            ASSERT_EQ(next(table, elems[n].point), elems[n + 1].point) << p1 << "," << p2 << " at " << n;
            ASSERT_EQ(prev(table, elems[n + 1].point), elems[n].point);
        }
    }
}

TEST(Next, NegativeCoordinatesRejected)
{
    ConvergentTable table(validate_pair(2, 3));
    EXPECT_THROW(next(table, {-1, 0}), std::invalid_argument);
}

TEST(Next, BudgetExceededForHugeCoordinates)
{
    ConvergentTable table(validate_pair(2, 3).with_bit_budget(1000).with_float_filter(false));
    EXPECT_THROW(next(table, {5'000'000, 3}), BudgetExceeded);
}
