#pragma once

// Rectangle families over finite windows, exhaustive partition checks, and
// large-gap witnesses.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <tuple>
#include <vector>

#include "lattice_succ/cf_engine.hpp"
#include "lattice_succ/report.hpp"
#include "lattice_succ/successor.hpp"

namespace lattice_succ {

enum class RectFamily { A, P, ATilde, PTilde };

inline const char* to_string(RectFamily f)
{
    switch (f) {
    case RectFamily::A: return "A";
    case RectFamily::P: return "P";
    case RectFamily::ATilde: return "A~";
    case RectFamily::PTilde: return "P~";
    }
    return "?";
}

/// Full (unclipped) extents, inclusive on both ends.
struct Rectangle {
    RectFamily family = RectFamily::P;
    std::size_t level = 0;
    Exponent band = 0;
    Exponent x_min = 0;
    Exponent x_max = 0;
    Exponent y_min = 0;
    Exponent y_max = 0;

    Exponent width() const noexcept { return x_max - x_min + 1; }
    Exponent height() const noexcept { return y_max - y_min + 1; }
    bool contains(const GridPoint& p) const noexcept
    {
        return x_min <= p.i && p.i <= x_max && y_min <= p.j && p.j <= y_max;
    }

    friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

inline Rectangle source_rectangle(const ConvergentTable& table, Family family, std::size_t level,
                                  Exponent band)
{
    const auto& h = table.numerators();
    const auto& k = table.denominators();
    if (family == Family::A) {
        const Exponent x0 = k.at(2 * level - 1) + band * k.at(2 * level);
        return {RectFamily::A, level, band, x0, x0 + k[2 * level] - 1, 0, h[2 * level] - 1};
    }
    const Exponent y0 = h.at(2 * level) + band * h.at(2 * level + 1);
    return {RectFamily::P, level, band, 0, k[2 * level + 1] - 1, y0, y0 + h[2 * level + 1] - 1};
}

/// The successor-side partner of a source rectangle; same dimensions.
inline Rectangle translated_rectangle(const ConvergentTable& table, Family family,
                                      std::size_t level, Exponent band)
{
    const auto& h = table.numerators();
    const auto& k = table.denominators();
    if (family == Family::A) {
        const Exponent y0 = h.at(2 * level - 1) + band * h.at(2 * level);
        return {RectFamily::ATilde, level, band, 0, k[2 * level] - 1, y0, y0 + h[2 * level] - 1};
    }
    const Exponent x0 = k.at(2 * level) + band * k.at(2 * level + 1);
    return {RectFamily::PTilde, level, band, x0, x0 + k[2 * level + 1] - 1, 0, h[2 * level + 1] - 1};
}

/// Translation vector taking a source rectangle onto its partner.
inline GridPoint translation(const ConvergentTable& table, Family family, std::size_t level,
                             Exponent band)
{
    const auto& h = table.numerators();
    const auto& k = table.denominators();
    if (family == Family::A) {
        return {-(k.at(2 * level - 1) + band * k.at(2 * level)),
                h.at(2 * level - 1) + band * h.at(2 * level)};
    }
    return {k.at(2 * level) + band * k.at(2 * level + 1),
            -(h.at(2 * level) + band * h.at(2 * level + 1))};
}

/// All rectangles of one family set (source, or translated when `tilde`)
/// meeting [0, width) x [0, height), ordered by family, level, band.
inline std::vector<Rectangle> rectangles_in_window(ConvergentTable& table, Exponent width,
                                                   Exponent height, bool tilde)
{
    if (width < 1 || height < 1) throw std::invalid_argument("window must be non-empty");
    table.ensure_covers(width, height);
    std::vector<Rectangle> out;
    auto make = [&](Family f, std::size_t level, Exponent band) {
        return tilde ? translated_rectangle(table, f, level, band)
                     : source_rectangle(table, f, level, band);
    };
    auto meets = [&](const Rectangle& r) { return r.x_min < width && r.y_min < height; };

    // A family: level i >= 1 needs rows 2i-1, 2i and quotient 2i+1.
    for (std::size_t level = 1; 2 * level + 1 <= table.depth(); ++level) {
        for (Exponent t = 0; t < table.quotient(2 * level + 1); ++t) {
            const Rectangle r = make(Family::A, level, t);
            if (meets(r)) out.push_back(r);
        }
    }
    for (std::size_t level = 0; 2 * level + 2 <= table.depth(); ++level) {
        for (Exponent t = 0; t < table.quotient(2 * level + 2); ++t) {
            const Rectangle r = make(Family::P, level, t);
            if (meets(r)) out.push_back(r);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const Rectangle& a, const Rectangle& b) {
        return std::tie(a.family, a.level, a.band) < std::tie(b.family, b.level, b.band);
    });
    return out;
}

/// Exhaustive cell count over the window: every cell must be covered exactly
/// once, except that the origin must stay uncovered for the translated family.
struct PartitionReport : VerifyReport {
    std::vector<GridPoint> uncovered;
    std::size_t rectangles = 0;
};

inline PartitionReport verify_partition(ConvergentTable& table, Exponent width, Exponent height,
                                        bool tilde)
{
    const auto rects = rectangles_in_window(table, width, height, tilde);
    PartitionReport report;
    report.rectangles = rects.size();
    const auto w = static_cast<std::size_t>(width);
    std::vector<unsigned> cover(w * static_cast<std::size_t>(height), 0);
    for (const Rectangle& r : rects) {
        for (Exponent y = r.y_min; y <= std::min(r.y_max, height - 1); ++y)
            for (Exponent x = r.x_min; x <= std::min(r.x_max, width - 1); ++x)
                ++cover[static_cast<std::size_t>(y) * w + static_cast<std::size_t>(x)];
    }
    for (Exponent y = 0; y < height; ++y) {
        for (Exponent x = 0; x < width; ++x) {
            const unsigned c = cover[static_cast<std::size_t>(y) * w + static_cast<std::size_t>(x)];
            ++report.checks;
            if (c == 0) report.uncovered.push_back({x, y});
            const bool origin = x == 0 && y == 0;
            const unsigned expected = tilde && origin ? 0 : 1;
            if (c != expected) {
                std::ostringstream msg;
                msg << "cell (" << x << ',' << y << ") covered " << c << " times, expected " << expected;
                report.fail(msg.str());
            }
        }
    }
    return report;
}

/// A consecutive pair of S and the integer distance between them.
struct GapWitness {
    GridPoint point;
    GridPoint succ;
    BigInt gap;
};

enum class GapCorner { A, P };

/// Witness at the far corner of the last band of the A rectangles (or P
/// rectangles) at `level`: the point (k_{2L+1} - 1, h_{2L} - 1) for A, and
/// (k_{2L+1} - 1, h_{2L+2} - 1) for P. The successor comes from the tiling.
inline GapWitness large_gap(ConvergentTable& table, std::size_t level,
                            GapCorner corner = GapCorner::A)
{
    if (corner == GapCorner::A && level < 1) throw std::invalid_argument("A-family levels start at 1");
    table.extend_to(2 * level + 2);
    const Family family = corner == GapCorner::A ? Family::A : Family::P;
    const Exponent last_band = table.quotient(corner == GapCorner::A ? 2 * level + 1 : 2 * level + 2) - 1;
    const Rectangle r = source_rectangle(table, family, level, last_band);
    const GridPoint point{r.x_max, r.y_max};
    const GridPoint succ = next(table, point);
    return {point, succ, value(table.pair(), succ) - value(table.pair(), point)};
}

} // namespace lattice_succ
