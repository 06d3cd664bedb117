#pragma once

// Brute-force ground truth: sorted enumeration of S by a row merge.
//
// Row j holds the smallest not-yet-emitted element p1^i p2^j. The row with the
// least value is emitted and advanced; emitting (0, j) opens row j + 1. This
// produces every element exactly once without duplicate handling.

#include <cstddef>
#include <optional>
#include <queue>
#include <vector>

#include "lattice_succ/core_arith.hpp"
#include "lattice_succ/successor.hpp"

namespace lattice_succ {

/// How the stream orders its frontier.
enum class OracleOrder {
    /// Multiply out and compare big-integer values. Shares no code with the
    /// alpha comparisons.
    ExactValue,
    /// Compare exponent differences through log_sign, avoiding the products.
    ExponentForm,
};

struct Element {
    GridPoint point;
    BigInt value;
};

class SortedStream {
public:
    explicit SortedStream(GeneratorPair pair, OracleOrder order = OracleOrder::ExactValue)
        : pair_(std::move(pair)), order_(order), heap_(RowGreater{this})
    {
        open_row();
    }

    // The heap comparator points back at this stream.
    SortedStream(const SortedStream&) = delete;
    SortedStream& operator=(const SortedStream&) = delete;

    const GeneratorPair& pair() const noexcept { return pair_; }

    /// Coordinates of the next element in increasing order.
    GridPoint next_point()
    {
        const std::size_t row = heap_.top();
        heap_.pop();
        Row& r = rows_[row];
        const GridPoint out{r.i, static_cast<Exponent>(row)};
        if (r.i == 0) open_row();
        // open_row may reallocate rows_.
        Row& advanced = rows_[row];
        ++advanced.i;
        if (order_ == OracleOrder::ExactValue) advanced.value *= static_cast<unsigned long>(pair_.p1());
        heap_.push(row);
        return out;
    }

    Element next()
    {
        if (order_ == OracleOrder::ExactValue) {
            const std::size_t row = heap_.top();
            BigInt v = rows_[row].value;
            GridPoint p = next_point();
            return {p, std::move(v)};
        }
        GridPoint p = next_point();
        return {p, value(pair_, p)};
    }

private:
    struct Row {
        Exponent i = 0;
        BigInt value;
    };

    struct RowGreater {
        const SortedStream* self;
        bool operator()(std::size_t a, std::size_t b) const
        {
            const Row& ra = self->rows_[a];
            const Row& rb = self->rows_[b];
            if (self->order_ == OracleOrder::ExactValue) return cmp(ra.value, rb.value) > 0;
            // p1^ia p2^a > p1^ib p2^b  <=>  (ia - ib) log p1 - (b - a) log p2 > 0
            return log_sign(self->pair_, ra.i - rb.i,
                            static_cast<Exponent>(b) - static_cast<Exponent>(a)) > 0;
        }
    };

    void open_row()
    {
        Row r;
        if (order_ == OracleOrder::ExactValue)
            r.value = detail::power(pair_.p2(), static_cast<Exponent>(rows_.size()));
        rows_.push_back(std::move(r));
        heap_.push(rows_.size() - 1);
    }

    GeneratorPair pair_;
    OracleOrder order_;
    std::vector<Row> rows_;
    std::priority_queue<std::size_t, std::vector<std::size_t>, RowGreater> heap_;
};

/// The first `count` elements of S in increasing order.
inline std::vector<Element> enumerate(const GeneratorPair& pair, std::size_t count,
                                      OracleOrder order = OracleOrder::ExactValue)
{
    if (count < 1) throw std::invalid_argument("enumerate requires count >= 1");
    SortedStream stream(pair, order);
    std::vector<Element> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) out.push_back(stream.next());
    return out;
}

/// Successor of p found by enumerating S from 1 until p is passed.
inline GridPoint naive_next(const GeneratorPair& pair, const GridPoint& p,
                            OracleOrder order = OracleOrder::ExactValue)
{
    detail::require_grid(p);
    SortedStream stream(pair, order);
    while (stream.next_point() != p) {
    }
    return stream.next_point();
}

/// Predecessor of p by enumeration; nullopt for the origin.
inline std::optional<GridPoint> naive_prev(const GeneratorPair& pair, const GridPoint& p,
                                           OracleOrder order = OracleOrder::ExactValue)
{
    detail::require_grid(p);
    SortedStream stream(pair, order);
    std::optional<GridPoint> last;
    for (GridPoint q = stream.next_point(); q != p; q = stream.next_point()) last = q;
    return last;
}

/// Looks for an element of S strictly between lo and hi (value(lo) < value(hi))
/// by checking, row by row, the least element of each row above lo. Uses only
/// exact alpha comparisons, never the rectangle tiling. Returns a
/// counterexample if one exists.
inline std::optional<GridPoint> element_strictly_between(const GeneratorPair& pair,
                                                         const GridPoint& lo, const GridPoint& hi)
{
    auto greater_than = [&](const GridPoint& a, const GridPoint& b) {
        return log_sign(pair, a.i - b.i, b.j - a.j) > 0;
    };
    if (!greater_than(hi, lo)) throw std::invalid_argument("element_strictly_between needs lo < hi");

    for (Exponent row = 0;; ++row) {
        // Least i with i*alpha + row > lo.i*alpha + lo.j.
        const Exponent m = lo.j - row;
        Exponent i = 0;
        if (m > 0)
            i = lo.i + upper_sequence(pair, m);
        else if (m == 0)
            i = lo.i + 1;
        else
            i = std::max<Exponent>(0, lo.i - lower_sequence(pair, -m));
        const GridPoint candidate{i, row};
        if (candidate != hi && greater_than(hi, candidate)) return candidate;
        // Once the row starts at or above hi, no later row can dip below it.
        if (i == 0) break;
    }
    return std::nullopt;
}

} // namespace lattice_succ
