#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "cfrac/bigint.hpp"
#include "cfrac/quadratic_field.hpp"

namespace cfrac {

/// Quadratic irrational (P + √D) / Q, with √D the positive root.
///
/// Construction keeps Q | (D − P²), scaling all three by |Q| when the given
/// triple does not satisfy it. That divisibility is what keeps every state of
/// the continued-fraction expansion integral.
class QuadraticSurd {
 public:
  /// Throws Error(ZeroQ), Error(NonPositiveRadicand) or Error(PerfectSquare).
  QuadraticSurd(BigInt p, BigInt d, BigInt q);

  const BigInt& P() const noexcept { return p_; }
  const BigInt& D() const noexcept { return d_; }
  const BigInt& Q() const noexcept { return q_; }

  /// (P − √D)/Q, stored as (−P + √D)/(−Q). An involution on the triple.
  QuadraticSurd conjugate() const;

  /// Unique representative of the value, derived from its primitive minimal
  /// polynomial: √2 is (0, 2, 1), 1+√2 is (1, 2, 1), the golden ratio (1, 5, 2).
  QuadraticSurd canonical() const;

  /// {A, B, C}, primitive with A > 0, such that A·x² + B·x + C = 0. Shared
  /// with the conjugate.
  std::array<BigInt, 3> minimal_polynomial() const;

  QuadraticNumber value() const;
  BigInt floor() const;

  /// ASCII rendering, e.g. "(1+sqrt(5))/2", "1-sqrt(2)", "sqrt(2)".
  std::string str() const;

  /// Equality of the real numbers denoted, not of the triples.
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y);

 private:
  BigInt p_;
  BigInt d_;
  BigInt q_;
};

/// Irrational element of Q(√d) as a canonical surd. Throws
/// Error(InvalidArgument) when `value` is rational.
QuadraticSurd to_surd(const QuadraticNumber& value);

/// [a0, ..., ak, (b1, ..., bh)] with the period repeating forever.
///
/// Construction normalizes: the period shrinks to its minimal block and
/// pre-period terms that merely repeat the period's tail are rotated into it,
/// so equal values have equal PeriodicCFs.
class PeriodicCF {
 public:
  /// Throws Error(Invariant) on an empty period or a non-positive term after a0.
  PeriodicCF(std::vector<BigInt> pre_period, std::vector<BigInt> period);

  const std::vector<BigInt>& pre_period() const noexcept { return pre_period_; }
  const std::vector<BigInt>& period() const noexcept { return period_; }

  const BigInt& term(std::size_t index) const;
  /// First `count` terms of the infinite expansion.
  std::vector<BigInt> terms(std::size_t count) const;

  friend bool operator==(const PeriodicCF&, const PeriodicCF&) = default;

 private:
  std::vector<BigInt> pre_period_;
  std::vector<BigInt> period_;
};

inline constexpr std::size_t kDefaultExpansionBudget = 1'000'000;

/// Continued fraction of `surd` by the integer (P, Q) recurrence with fixed D.
/// The period is the cycle between the first repeated (P, Q) state and its
/// earlier occurrence. Throws Error(PeriodNotFound) if no state repeats within
/// `max_terms` terms.
PeriodicCF expand_surd(const QuadraticSurd& surd, std::size_t max_terms = kDefaultExpansionBudget);

/// Expansion of √n. Throws Error(PerfectSquare) for square n (including 0, 1)
/// and Error(InvalidArgument) for negative n.
PeriodicCF sqrt_cf(const BigInt& n, std::size_t max_terms = kDefaultExpansionBudget);

/// Inverse of expand_surd: solves the fixed-point quadratic of the purely
/// periodic tail, keeps its root > 1, then folds the pre-period back in.
/// Returns the canonical triple.
QuadraticSurd periodic_to_surd(const PeriodicCF& pcf);

/// Correctly rounded decimal rendering with `digits` places.
std::string decimal_approx(const QuadraticSurd& surd, unsigned digits);

}  // namespace cfrac
