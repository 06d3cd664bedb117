#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "lattice_succ/core_arith.hpp"
#include "lattice_succ/report.hpp"

namespace lattice_succ {

/// Simple continued fraction [0; a_1, a_2, ...] of alpha with its primary
/// convergents h_i / k_i, grown on demand.
///
/// Row 0 is the fixed seed 0/1. Row m+1 is found by an exact Stern-Brocot
/// descent: a_{m+1} is the largest t for which the mediant
/// (h_{m-1} + t h_m) / (k_{m-1} + t k_m) stays on the side of alpha occupied
/// by convergent m-1 (with the virtual row h_{-1}/k_{-1} = 1/0 above alpha).
///
/// Not internally synchronized: extending calls must be serialized by the
/// caller. A failed extension (BudgetExceeded) leaves the table unchanged.
class ConvergentTable {
public:
    explicit ConvergentTable(GeneratorPair pair) : pair_(std::move(pair))
    {
        quotients_.push_back(0);
        numerators_.push_back(0);
        denominators_.push_back(1);
    }

    const GeneratorPair& pair() const noexcept { return pair_; }

    /// Index of the last stored row.
    std::size_t depth() const noexcept { return quotients_.size() - 1; }

    Exponent quotient(std::size_t i) const { return quotients_.at(check(i)); }
    Exponent numerator(std::size_t i) const { return numerators_.at(check(i)); }
    Exponent denominator(std::size_t i) const { return denominators_.at(check(i)); }

    const std::vector<Exponent>& quotients() const noexcept { return quotients_; }
    const std::vector<Exponent>& numerators() const noexcept { return numerators_; }
    const std::vector<Exponent>& denominators() const noexcept { return denominators_; }

    void extend_to(std::size_t i)
    {
        while (depth() < i) push_next_row();
    }

    void extend_until_denominator_exceeds(Exponent bound)
    {
        while (denominators_.back() <= bound) push_next_row();
    }

    /// Extends until the last two rows both have h > y and k > x, which
    /// brackets (x, y) in every band scan of either parity.
    void ensure_covers(Exponent x, Exponent y)
    {
        while (depth() < 2 || numerators_[depth() - 1] <= y || denominators_[depth() - 1] <= x)
            push_next_row();
    }

private:
    std::size_t check(std::size_t i) const
    {
        if (i > depth()) {
            throw IndexBeyondTable("convergent index " + std::to_string(i) +
                                   " beyond table depth " + std::to_string(depth()));
        }
        return i;
    }

    void push_next_row()
    {
        const std::size_t m = depth();
        const Exponent h_prev = m == 0 ? 1 : numerators_[m - 1];
        const Exponent k_prev = m == 0 ? 0 : denominators_[m - 1];
        const Exponent h_cur = numerators_[m];
        const Exponent k_cur = denominators_[m];
        // Convergent m-1 (and m+1) lies below alpha iff m-1 is even.
        const bool target_below = (m + 1) % 2 == 0;

        auto same_side = [&](Exponent t) {
            const bool below = compare_fraction(pair_, h_prev + t * h_cur, k_prev + t * k_cur) < 0;
            return below == target_below;
        };

        // t = 1 is always on the same side since every partial quotient is >= 1.
        Exponent lo = 1;
        Exponent hi = 2;
        while (same_side(hi)) {
            lo = hi;
            hi *= 2;
        }
        while (hi - lo > 1) {
            const Exponent mid = lo + (hi - lo) / 2;
            (same_side(mid) ? lo : hi) = mid;
        }

        quotients_.push_back(lo);
        numerators_.push_back(lo * h_cur + h_prev);
        denominators_.push_back(lo * k_cur + k_prev);
    }

    GeneratorPair pair_;
    std::vector<Exponent> quotients_;
    std::vector<Exponent> numerators_;
    std::vector<Exponent> denominators_;
};

/// Mediant (h_base + t h_{base+1}) / (k_base + t k_{base+1}).
struct SecondaryConvergent {
    std::size_t base = 0;
    Exponent mediant_count = 0;
    Exponent numerator = 0;
    Exponent denominator = 0;

    friend bool operator==(const SecondaryConvergent&, const SecondaryConvergent&) = default;
};

/// The monotone chain of secondary convergents strictly between convergent
/// `level` and convergent `level + 2`: mediant counts 0 < t < a_{level+2}.
inline std::vector<SecondaryConvergent> secondary_convergents(const ConvergentTable& table,
                                                              std::size_t level)
{
    const Exponent a = table.quotient(level + 2);
    const Exponent h0 = table.numerator(level), h1 = table.numerator(level + 1);
    const Exponent k0 = table.denominator(level), k1 = table.denominator(level + 1);
    std::vector<SecondaryConvergent> out;
    for (Exponent t = 1; t < a; ++t)
        out.push_back({level, t, h0 + t * h1, k0 + t * k1});
    return out;
}

/// Recurrence, unit determinant, lowest terms, and side of alpha by parity,
/// for every stored row.
inline VerifyReport verify_convergent_table(const ConvergentTable& table)
{
    VerifyReport report;
    const auto& a = table.quotients();
    const auto& h = table.numerators();
    const auto& k = table.denominators();
    auto fail_at = [&](std::size_t i, const std::string& what) {
        report.fail(what + " at index " + std::to_string(i), i);
    };
    for (std::size_t i = 0; i <= table.depth() && report.passed; ++i) {
        report.checks += 2;
        if (std::gcd(h[i], k[i]) != 1) fail_at(i, "convergent not in lowest terms");
        const bool below = compare_fraction(table.pair(), h[i], k[i]) < 0;
        if (below != (i % 2 == 0)) fail_at(i, "convergent on the wrong side of alpha");
        if (i + 1 <= table.depth()) {
            ++report.checks;
            const Exponent det = h[i] * k[i + 1] - k[i] * h[i + 1];
            if (det != 1 && det != -1) fail_at(i, "adjacent determinant is not +-1");
        }
        if (i + 2 <= table.depth()) {
            ++report.checks;
            if (h[i + 2] != a[i + 2] * h[i + 1] + h[i] || k[i + 2] != a[i + 2] * k[i + 1] + k[i])
                fail_at(i + 2, "recurrence broken");
        }
    }
    return report;
}

} // namespace lattice_succ
