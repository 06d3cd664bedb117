#pragma once

// Exact order decisions against alpha = log(p1) / log(p2).
//
// Every comparison reduces to the sign of  c * log(p1) - d * log(p2)  for
// integers c, d, which is decided by comparing p1^c with p2^d as big
// integers. A long-double estimate is consulted first and trusted only when
// its error bound certifies the sign.

#include <algorithm>
#include <bit>
#include <cfloat>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "lattice_succ/errors.hpp"

namespace lattice_succ {

/// Exponent of a generator. Bounded in practice by the bit budget.
using Exponent = std::int64_t;

/// Exact unbounded integer used for element values and gaps.
using BigInt = mpz_class;

inline constexpr std::uint64_t kDefaultBitBudget = 1'000'000;

namespace detail {

/// Returns (base, power) with value == base^power and power maximal.
inline std::pair<std::uint64_t, unsigned> perfect_power_decomposition(std::uint64_t value)
{
    if (value < 4) return {value, 1};
    const auto max_power = static_cast<unsigned>(std::bit_width(value) - 1);
    BigInt root;
    const BigInt v(static_cast<unsigned long>(value));
    for (unsigned k = max_power; k >= 2; --k) {
        if (mpz_root(root.get_mpz_t(), v.get_mpz_t(), k) != 0)
            return {root.get_ui(), k};
    }
    return {value, 1};
}

inline BigInt power(std::uint64_t base, Exponent exponent)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exponent));
    return out;
}

inline std::strong_ordering from_int(int c)
{
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace detail

/// A validated pair of multiplicatively independent generators 1 < p1 < p2,
/// together with the bit budget that bounds exact power comparisons.
class GeneratorPair {
public:
    std::uint64_t p1() const noexcept { return p1_; }
    std::uint64_t p2() const noexcept { return p2_; }
    std::uint64_t bit_budget() const noexcept { return bit_budget_; }
    bool float_filter() const noexcept { return float_filter_; }

    long double log2_p1() const noexcept { return log2_p1_; }
    long double log2_p2() const noexcept { return log2_p2_; }

    GeneratorPair with_bit_budget(std::uint64_t bits) const
    {
        if (bits == 0) throw std::invalid_argument("bit budget must be positive");
        GeneratorPair copy = *this;
        copy.bit_budget_ = bits;
        return copy;
    }

    /// Disabling the filter forces every comparison through big integers.
    GeneratorPair with_float_filter(bool enabled) const
    {
        GeneratorPair copy = *this;
        copy.float_filter_ = enabled;
        return copy;
    }

    friend bool operator==(const GeneratorPair& a, const GeneratorPair& b) noexcept
    {
        return a.p1_ == b.p1_ && a.p2_ == b.p2_;
    }

private:
    friend GeneratorPair validate_pair(std::uint64_t p1, std::uint64_t p2);

    GeneratorPair(std::uint64_t p1, std::uint64_t p2)
        : p1_(p1), p2_(p2),
          log2_p1_(std::log2(static_cast<long double>(p1))),
          log2_p2_(std::log2(static_cast<long double>(p2)))
    {
    }

    std::uint64_t p1_;
    std::uint64_t p2_;
    std::uint64_t bit_budget_ = kDefaultBitBudget;
    bool float_filter_ = true;
    long double log2_p1_;
    long double log2_p2_;
};

/// Checks 1 < p1 < p2 and multiplicative independence. Independence is
/// decided by writing p1 = m^u and p2 = n^v with u, v maximal: the pair is
/// dependent iff m == n.
inline GeneratorPair validate_pair(std::uint64_t p1, std::uint64_t p2)
{
    if (p1 <= 1 || p2 <= p1) {
        throw OrderViolation("generators must satisfy 1 < p1 < p2 (got p1=" + std::to_string(p1) +
                             ", p2=" + std::to_string(p2) + ")");
    }
    if (p1 > std::numeric_limits<unsigned long>::max() ||
        p2 > std::numeric_limits<unsigned long>::max()) {
        throw OrderViolation("generators must fit in an unsigned long");
    }
    const auto [base1, pow1] = detail::perfect_power_decomposition(p1);
    const auto [base2, pow2] = detail::perfect_power_decomposition(p2);
    if (base1 == base2) {
        throw RationalLogRatio("theory requires multiplicatively independent generators: " +
                               std::to_string(p1) + " = " + std::to_string(base1) + "^" +
                               std::to_string(pow1) + ", " + std::to_string(p2) + " = " +
                               std::to_string(base2) + "^" + std::to_string(pow2));
    }
    return GeneratorPair(p1, p2);
}

/// The real number coeff * alpha - constant.
struct AffineForm {
    Exponent coeff = 0;
    Exponent constant = 0;

    friend bool operator==(const AffineForm&, const AffineForm&) = default;

    friend AffineForm operator+(const AffineForm& a, const AffineForm& b)
    {
        return {a.coeff + b.coeff, a.constant + b.constant};
    }
    friend AffineForm operator-(const AffineForm& a, const AffineForm& b)
    {
        return {a.coeff - b.coeff, a.constant - b.constant};
    }
    friend AffineForm operator-(const AffineForm& a) { return {-a.coeff, -a.constant}; }

    friend std::ostream& operator<<(std::ostream& os, const AffineForm& f)
    {
        return os << f.coeff << "*alpha - " << f.constant;
    }
};

/// Sign of  p1_exp * log(p1) - p2_exp * log(p2),  i.e. the order of
/// p1^p1_exp against p2^p2_exp with negative exponents moved across.
inline std::strong_ordering log_sign(const GeneratorPair& pair, Exponent p1_exp, Exponent p2_exp)
{
    if (p1_exp == 0 && p2_exp == 0) return std::strong_ordering::equal;
    if (p1_exp >= 0 && p2_exp <= 0) return std::strong_ordering::greater;
    if (p1_exp <= 0 && p2_exp >= 0) return std::strong_ordering::less;

    // Same sign: both powers are genuinely needed.
    const bool negative = p1_exp < 0;
    const long double e1 = std::fabs(static_cast<long double>(p1_exp));
    const long double e2 = std::fabs(static_cast<long double>(p2_exp));
    const long double bits1 = e1 * pair.log2_p1();
    const long double bits2 = e2 * pair.log2_p2();
    if (pair.float_filter()) {
        const long double diff = bits1 - bits2;
        const long double error = (bits1 + bits2) * (16.0L * LDBL_EPSILON) + 1e-30L;
        if (diff > error) return negative ? std::strong_ordering::less : std::strong_ordering::greater;
        if (diff < -error) return negative ? std::strong_ordering::greater : std::strong_ordering::less;
    }

    // Only the exact path materializes powers, so only it is budgeted.
    const auto budget = static_cast<long double>(pair.bit_budget());
    if (bits1 > budget || bits2 > budget) {
        throw BudgetExceeded("power comparison needs ~" +
                             std::to_string(static_cast<std::uint64_t>(std::max(bits1, bits2))) +
                             " bits, budget is " + std::to_string(pair.bit_budget()));
    }

    const BigInt lhs = detail::power(pair.p1(), negative ? -p1_exp : p1_exp);
    const BigInt rhs = detail::power(pair.p2(), negative ? -p2_exp : p2_exp);
    const int c = cmp(lhs, rhs);
    return detail::from_int(negative ? -c : c);
}

/// Order of h/k relative to alpha. Never equal, since alpha is irrational.
inline std::strong_ordering compare_fraction(const GeneratorPair& pair, Exponent h, Exponent k)
{
    if (k < 1 || h < 0) throw std::invalid_argument("compare_fraction requires h >= 0, k >= 1");
    // h/k < alpha  <=>  h log p2 < k log p1
    const auto s = log_sign(pair, k, h);
    if (s == 0) throw InternalConsistency("h/k compared equal to an irrational alpha");
    return s > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

/// Exact order of the two reals u.coeff*alpha - u.constant and v.coeff*alpha - v.constant.
inline std::strong_ordering compare_affine(const GeneratorPair& pair, const AffineForm& u,
                                           const AffineForm& v)
{
    const AffineForm d = u - v;
    return log_sign(pair, d.coeff, d.constant);
}

/// ceil(n / alpha): the unique k with (k-1)*alpha < n < k*alpha.
inline Exponent upper_sequence(const GeneratorPair& pair, Exponent n)
{
    if (n < 1) throw std::invalid_argument("upper_sequence requires n >= 1");
    auto below = [&](Exponent k) { return compare_fraction(pair, n, k) < 0; };
    // alpha < 1, so n / n lies above alpha.
    Exponent lo = n;
    Exponent hi = 2 * n;
    while (!below(hi)) {
        lo = hi;
        hi *= 2;
    }
    // invariant: !below(lo), below(hi)
    while (hi - lo > 1) {
        const Exponent mid = lo + (hi - lo) / 2;
        (below(mid) ? hi : lo) = mid;
    }
    return hi;
}

/// floor(n / alpha) = upper_sequence(n) - 1.
inline Exponent lower_sequence(const GeneratorPair& pair, Exponent n)
{
    return upper_sequence(pair, n) - 1;
}

} // namespace lattice_succ
