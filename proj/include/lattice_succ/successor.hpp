#pragma once

// Successor and predecessor in S = {p1^i p2^j} straight from exponent
// coordinates.
//
// The exponent grid is tiled by two rectangle families built from the
// convergents of alpha:
//
//   A(level i >= 1, band t < a_{2i+1}):  x in k_{2i-1} + t k_{2i} + [0, k_{2i}),  y in [0, h_{2i})
//   P(level i >= 0, band t < a_{2i+2}):  x in [0, k_{2i+1}),  y in h_{2i} + t h_{2i+1} + [0, h_{2i+1})
//
// and the grid minus the origin by their translated partners
//
//   A~: x in [0, k_{2i}),  y in h_{2i-1} + t h_{2i} + [0, h_{2i})
//   P~: x in k_{2i} + t k_{2i+1} + [0, k_{2i+1}),  y in [0, h_{2i+1})
//
// The element after the point at offset (r, s) of a source rectangle is the
// point at the same offset of its translated partner, and vice versa for
// the predecessor.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <ostream>

#include "lattice_succ/cf_engine.hpp"
#include "lattice_succ/core_arith.hpp"

namespace lattice_succ {

/// Exponent coordinates of p1^i * p2^j.
struct GridPoint {
    Exponent i = 0;
    Exponent j = 0;

    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;

    friend std::ostream& operator<<(std::ostream& os, const GridPoint& p)
    {
        return os << '(' << p.i << ',' << p.j << ')';
    }
};

enum class Family { A, P };

inline const char* to_string(Family f) { return f == Family::A ? "A" : "P"; }

/// Position of a grid point inside a source rectangle.
struct RectangleId {
    Family family = Family::P;
    std::size_t level = 0;
    Exponent band = 0;
    Exponent offset_r = 0;
    Exponent offset_s = 0;

    friend bool operator==(const RectangleId&, const RectangleId&) = default;
};

/// Position of a grid point inside a translated rectangle.
struct TranslatedRectangleId {
    Family family = Family::P;
    std::size_t level = 0;
    Exponent band = 0;
    Exponent offset_r = 0;
    Exponent offset_s = 0;

    friend bool operator==(const TranslatedRectangleId&, const TranslatedRectangleId&) = default;
};

namespace detail {

/// Largest level in [first, last] with start(level) <= value, where start
/// is increasing and start(first) <= value.
template <class StartFn>
std::size_t last_level_at_most(std::size_t first, std::size_t last, Exponent value, StartFn start)
{
    while (first < last) {
        const std::size_t mid = first + (last - first + 1) / 2;
        if (start(mid) <= value)
            first = mid;
        else
            last = mid - 1;
    }
    return first;
}

inline void require_grid(const GridPoint& p)
{
    if (p.i < 0 || p.j < 0) throw std::invalid_argument("grid coordinates must be non-negative");
}

} // namespace detail

/// The source rectangle containing p. Scans the P bands along y first; if
/// p.i is too wide for that band the point lies in an A band along x.
inline RectangleId locate(ConvergentTable& table, const GridPoint& p)
{
    detail::require_grid(p);
    table.ensure_covers(p.i, p.j);
    const auto& h = table.numerators();
    const auto& k = table.denominators();
    const std::size_t depth = table.depth();

    // P level j starts at y = h_{2j}; the table holds h_{2j+2} > p.j.
    const std::size_t p_level = detail::last_level_at_most(
        0, (depth - 1) / 2, p.j, [&](std::size_t lvl) { return h[2 * lvl]; });
    const Exponent p_width = h[2 * p_level + 1];
    if (p.i < k[2 * p_level + 1]) {
        const Exponent rel = p.j - h[2 * p_level];
        return {Family::P, p_level, rel / p_width, p.i, rel % p_width};
    }

    // A level i starts at x = k_{2i-1}; p.i >= k_1 here.
    const std::size_t a_level = detail::last_level_at_most(
        1, depth / 2, p.i, [&](std::size_t lvl) { return k[2 * lvl - 1]; });
    const Exponent a_width = k[2 * a_level];
    const Exponent rel = p.i - k[2 * a_level - 1];
    if (p.j >= h[2 * a_level])
        throw InternalConsistency("grid point escaped both rectangle families");
    return {Family::A, a_level, rel / a_width, rel % a_width, p.j};
}

/// The translated rectangle containing p != (0,0).
inline TranslatedRectangleId locate_translated(ConvergentTable& table, const GridPoint& p)
{
    detail::require_grid(p);
    if (p.i == 0 && p.j == 0) throw NoPredecessor("no predecessor: (0,0) is the least element");
    table.ensure_covers(p.i, p.j);
    const auto& h = table.numerators();
    const auto& k = table.denominators();
    const std::size_t depth = table.depth();

    if (p.i > 0) {
        // P~ level l starts at x = k_{2l}.
        const std::size_t level = detail::last_level_at_most(
            0, (depth - 1) / 2, p.i, [&](std::size_t lvl) { return k[2 * lvl]; });
        if (p.j < h[2 * level + 1]) {
            const Exponent width = k[2 * level + 1];
            const Exponent rel = p.i - k[2 * level];
            return {Family::P, level, rel / width, rel % width, p.j};
        }
    }

    // A~ level l >= 1 starts at y = h_{2l-1}; p.j >= h_1 = 1 here.
    const std::size_t level = detail::last_level_at_most(
        1, depth / 2, p.j,
        [&](std::size_t lvl) { return h[2 * lvl - 1]; });
    const Exponent height = h[2 * level];
    const Exponent rel = p.j - h[2 * level - 1];
    if (p.i >= k[2 * level])
        throw InternalConsistency("grid point escaped both translated families");
    return {Family::A, level, rel / height, p.i, rel % height};
}

/// Coordinates of a source rectangle position.
inline GridPoint to_point(const ConvergentTable& table, const RectangleId& id)
{
    const std::size_t l = id.level;
    if (id.family == Family::A) {
        return {table.denominator(2 * l - 1) + id.band * table.denominator(2 * l) + id.offset_r,
                id.offset_s};
    }
    return {id.offset_r,
            table.numerator(2 * l) + id.band * table.numerator(2 * l + 1) + id.offset_s};
}

/// Coordinates of a translated rectangle position.
inline GridPoint to_point(const ConvergentTable& table, const TranslatedRectangleId& id)
{
    const std::size_t l = id.level;
    if (id.family == Family::A) {
        return {id.offset_r,
                table.numerator(2 * l - 1) + id.band * table.numerator(2 * l) + id.offset_s};
    }
    return {table.denominator(2 * l) + id.band * table.denominator(2 * l + 1) + id.offset_r,
            id.offset_s};
}

inline TranslatedRectangleId translated(const RectangleId& id)
{
    return {id.family, id.level, id.band, id.offset_r, id.offset_s};
}

inline RectangleId untranslated(const TranslatedRectangleId& id)
{
    return {id.family, id.level, id.band, id.offset_r, id.offset_s};
}

/// Coordinates of the element of S immediately after p1^p.i * p2^p.j.
inline GridPoint next(ConvergentTable& table, const GridPoint& p)
{
    return to_point(table, translated(locate(table, p)));
}

/// Coordinates of the element of S immediately before p; throws
/// NoPredecessor for the origin.
inline GridPoint prev(ConvergentTable& table, const GridPoint& p)
{
    return to_point(table, untranslated(locate_translated(table, p)));
}

/// p1^i * p2^j exactly.
inline BigInt value(const GeneratorPair& pair, const GridPoint& p)
{
    detail::require_grid(p);
    const long double bits = p.i * pair.log2_p1() + p.j * pair.log2_p2();
    if (bits > static_cast<long double>(pair.bit_budget()))
        throw BudgetExceeded("element value exceeds the bit budget");
    return detail::power(pair.p1(), p.i) * detail::power(pair.p2(), p.j);
}

} // namespace lattice_succ
