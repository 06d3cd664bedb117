#pragma once

// Executable checks of the upper/lower sequence identities at convergent
// numerators, the monotone chains of fractional parts, and the record
// (minimal fractional part) subsequences.

#include <cstddef>
#include <span>
#include <sstream>
#include <vector>

#include "lattice_succ/cf_engine.hpp"
#include "lattice_succ/core_arith.hpp"
#include "lattice_succ/report.hpp"

namespace lattice_succ {

/// Fractional data for one n: z = f(n)*alpha - n and y = n - g(n)*alpha.
struct FracPartRecord {
    Exponent n = 0;
    Exponent upper = 0;
    Exponent lower = 0;
    AffineForm z;
    AffineForm y;
};

inline FracPartRecord frac_part_record(const GeneratorPair& pair, Exponent n)
{
    const Exponent up = upper_sequence(pair, n);
    const Exponent low = up - 1;
    return {n, up, low, AffineForm{up, n}, AffineForm{-low, -n}};
}

/// Checks, for every family fully described by rows up to max_index,
///   f(h_{2j} + t h_{2j+1}) = k_{2j} + t k_{2j+1} = g(...) + 1      for 0 < t <= a_{2j+2}
///   g(h_{2l-1} + t h_{2l}) = k_{2l-1} + t k_{2l} = f(...) - 1      for 0 <= t <= a_{2l+1}
inline VerifyReport verify_fg_at_convergents(ConvergentTable& table, std::size_t max_index)
{
    table.extend_to(max_index);
    const GeneratorPair& pair = table.pair();
    const auto& a = table.quotients();
    const auto& h = table.numerators();
    const auto& k = table.denominators();
    VerifyReport report;

    auto check = [&](Exponent n, Exponent expected_upper, const char* family, std::size_t index,
                     Exponent t) {
        const Exponent up = upper_sequence(pair, n);
        const Exponent low = lower_sequence(pair, n);
        ++report.checks;
        if (up != expected_upper || low != expected_upper - 1) {
            std::ostringstream msg;
            msg << family << " family at index " << index << ", t=" << t << ": n=" << n
                << " gives f=" << up << ", g=" << low << ", expected f=" << expected_upper;
            report.fail(msg.str(), index);
        }
    };

    for (std::size_t j = 0; 2 * j + 2 <= max_index && report.passed; ++j) {
        for (Exponent t = 1; t <= a[2 * j + 2]; ++t)
            check(h[2 * j] + t * h[2 * j + 1], k[2 * j] + t * k[2 * j + 1], "lower-fraction", 2 * j, t);
    }
    for (std::size_t l = 1; 2 * l + 1 <= max_index && report.passed; ++l) {
        for (Exponent t = 0; t <= a[2 * l + 1]; ++t)
            check(h[2 * l - 1] + t * h[2 * l], k[2 * l - 1] + t * k[2 * l] + 1, "upper-fraction",
                  2 * l - 1, t);
    }
    return report;
}

/// Indices where z_n (upper) and y_n (lower) reach a new strict minimum.
struct RecordSubsequences {
    std::vector<Exponent> upper;
    std::vector<Exponent> lower;

    friend bool operator==(const RecordSubsequences&, const RecordSubsequences&) = default;
};

/// Linear scan over n = 1..N using exact affine comparisons only.
inline RecordSubsequences minimal_fractional_subsequences(const GeneratorPair& pair, Exponent N)
{
    if (N < 1) throw std::invalid_argument("record scan requires N >= 1");
    RecordSubsequences out;
    FracPartRecord best_z = frac_part_record(pair, 1);
    FracPartRecord best_y = best_z;
    out.upper.push_back(1);
    out.lower.push_back(1);
    for (Exponent n = 2; n <= N; ++n) {
        const FracPartRecord rec = frac_part_record(pair, n);
        const auto cz = compare_affine(pair, rec.z, best_z.z);
        const auto cy = compare_affine(pair, rec.y, best_y.y);
        if (cz == 0 || cy == 0)
            throw InternalConsistency("tie between fractional parts at distinct n=" + std::to_string(n));
        if (cz < 0) {
            out.upper.push_back(n);
            best_z = rec;
        }
        if (cy < 0) {
            out.lower.push_back(n);
            best_y = rec;
        }
    }
    return out;
}

/// Convergent-numerator chains up to N:
///   upper: h_0 + t h_1 (t = 1..a_2), h_2 + t h_3 (t = 1..a_4), ...
///   lower: h_1, h_1 + t h_2 (t = 1..a_3), h_3 + t h_4 (t = 1..a_5), ...
inline RecordSubsequences predicted_record_chains(ConvergentTable& table, Exponent N)
{
    while (table.depth() < 2 || table.numerator(table.depth() - 1) <= N) table.extend_to(table.depth() + 1);
    const auto& a = table.quotients();
    const auto& h = table.numerators();
    RecordSubsequences out;
    for (std::size_t base = 0; base + 2 <= table.depth(); ++base) {
        auto& chain = base % 2 == 0 ? out.upper : out.lower;
        if (base == 1 && h[1] <= N) chain.push_back(h[1]);
        for (Exponent t = 1; t <= a[base + 2]; ++t) {
            const Exponent n = h[base] + t * h[base + 1];
            if (n > N) break;
            chain.push_back(n);
        }
    }
    return out;
}

namespace detail {

/// Expected successive differences: step(i) repeated a_{i+1} times for
/// i = first, first + 2, ...
inline std::vector<Exponent> difference_pattern(const ConvergentTable& table, std::size_t first,
                                                std::size_t length)
{
    std::vector<Exponent> out;
    for (std::size_t i = first; out.size() < length && i + 1 <= table.depth(); i += 2) {
        for (Exponent t = 0; t < table.quotient(i + 1) && out.size() < length; ++t)
            out.push_back(table.numerator(i));
    }
    return out;
}

inline std::vector<Exponent> differences(Exponent start, const std::vector<Exponent>& seq)
{
    std::vector<Exponent> out;
    for (Exponent v : seq) {
        out.push_back(v - start);
        start = v;
    }
    return out;
}

} // namespace detail

/// The record theorem as a property: the scanned records coincide with the
/// convergent-numerator chains, and their consecutive differences follow
/// h_1 (a_2 times), h_3 (a_4 times), ... and h_2 (a_3 times), h_4 (a_5 times), ...
inline VerifyReport verify_record_theorem(ConvergentTable& table, Exponent N)
{
    VerifyReport report;
    const RecordSubsequences scanned = minimal_fractional_subsequences(table.pair(), N);
    const RecordSubsequences predicted = predicted_record_chains(table, N);
    auto show = [](const std::vector<Exponent>& v) {
        std::ostringstream os;
        for (std::size_t i = 0; i < v.size() && i < 12; ++i) os << (i ? "," : "") << v[i];
        if (v.size() > 12) os << ",...";
        return os.str();
    };

    ++report.checks;
    if (scanned.upper != predicted.upper)
        report.fail("upper records {" + show(scanned.upper) + "} != chain {" + show(predicted.upper) + "}");
    ++report.checks;
    if (scanned.lower != predicted.lower)
        report.fail("lower records {" + show(scanned.lower) + "} != chain {" + show(predicted.lower) + "}");

    // n_0 = 0 precedes the upper records.
    const auto up_diff = detail::differences(0, scanned.upper);
    ++report.checks;
    if (up_diff != detail::difference_pattern(table, 1, up_diff.size()))
        report.fail("upper record differences break the h_1, h_3, ... pattern");
    if (!scanned.lower.empty()) {
        std::vector<Exponent> tail(scanned.lower.begin() + 1, scanned.lower.end());
        const auto low_diff = detail::differences(scanned.lower.front(), tail);
        ++report.checks;
        if (low_diff != detail::difference_pattern(table, 2, low_diff.size()))
            report.fail("lower record differences break the h_2, h_4, ... pattern");
    }
    return report;
}

/// k_0 alpha - h_0 > (k_0 + k_1) alpha - (h_0 + h_1) > ... > k_2 alpha - h_2 > ...
inline std::vector<AffineForm> upper_fraction_chain(ConvergentTable& table, std::size_t max_index)
{
    table.extend_to(max_index);
    std::vector<AffineForm> out{{table.denominator(0), table.numerator(0)}};
    for (std::size_t j = 0; 2 * j + 2 <= max_index; ++j) {
        for (Exponent t = 1; t <= table.quotient(2 * j + 2); ++t) {
            out.push_back({table.denominator(2 * j) + t * table.denominator(2 * j + 1),
                           table.numerator(2 * j) + t * table.numerator(2 * j + 1)});
        }
    }
    return out;
}

/// h_1 - k_1 alpha > (h_1 + h_2) - (k_1 + k_2) alpha > ... > h_3 - k_3 alpha > ...
inline std::vector<AffineForm> lower_fraction_chain(ConvergentTable& table, std::size_t max_index)
{
    table.extend_to(max_index);
    std::vector<AffineForm> out;
    if (max_index < 1) return out;
    out.push_back({-table.denominator(1), -table.numerator(1)});
    for (std::size_t l = 1; 2 * l + 1 <= max_index; ++l) {
        for (Exponent t = 1; t <= table.quotient(2 * l + 1); ++t) {
            out.push_back({-(table.denominator(2 * l - 1) + t * table.denominator(2 * l)),
                           -(table.numerator(2 * l - 1) + t * table.numerator(2 * l))});
        }
    }
    return out;
}

/// Each link chain[i] > chain[i+1] must hold; the failing link index is reported.
inline VerifyReport check_strictly_decreasing(const GeneratorPair& pair,
                                              std::span<const AffineForm> chain)
{
    VerifyReport report;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        ++report.checks;
        if (compare_affine(pair, chain[i], chain[i + 1]) <= 0) {
            std::ostringstream msg;
            msg << "link " << i << ": (" << chain[i] << ") is not above (" << chain[i + 1] << ")";
            report.fail(msg.str(), i);
            break;
        }
    }
    return report;
}

inline VerifyReport verify_monotone_fractional_chains(ConvergentTable& table, std::size_t max_index)
{
    VerifyReport report;
    report.merge(check_strictly_decreasing(table.pair(), upper_fraction_chain(table, max_index)));
    report.merge(check_strictly_decreasing(table.pair(), lower_fraction_chain(table, max_index)));
    return report;
}

} // namespace lattice_succ
