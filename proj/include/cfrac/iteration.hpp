#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cfrac/bigint.hpp"
#include "cfrac/quadratic_field.hpp"
#include "cfrac/rational.hpp"
#include "cfrac/surd.hpp"

namespace cfrac {

/// How the first terms of t_{n+1} = κ + 1/t_n are laid out.
enum class Seeding {
  /// t_0 = κ and the recurrence from there on; t_n is the n-th convergent of [κ; κ, κ, ...].
  Recurrence,
  /// The worked-table layout: t_0 = κ, t_1 = κ + 1, t_2 = κ + 1/t_0, then
  /// t_{n+1} = κ + 1/t_n. From t_2 on this is the Recurrence trace shifted by
  /// one place; for κ = 1 the value 2 appears twice.
  Paper,
};

struct IterationTrace {
  BigInt kappa;
  Seeding seeding = Seeding::Recurrence;
  std::vector<Rational> terms;
  /// to_decimal(terms[i], digits)
  std::vector<std::string> decimals;
  unsigned digits = 3;
};

/// Throws Error(InvalidArgument) for κ < 1 or n_terms == 0.
IterationTrace iterate_simple(const BigInt& kappa, std::size_t n_terms,
                              Seeding seeding = Seeding::Recurrence, unsigned digits = 3);

/// Positive root (κ + √(κ² + 4)) / 2 of x² − κx − 1 = 0, canonical.
QuadraticSurd limit_simple(const BigInt& kappa);

struct ErrorBoundRow {
  std::size_t n = 0;
  QuadraticNumber lhs;  ///< |R_n − φ|
  QuadraticNumber rhs;  ///< (1/φ)^(n−1) · |R_1 − φ|
  bool holds = false;   ///< lhs <= rhs, decided exactly in Q(√5)
};

/// Checks |R_n − φ| <= (1/φ)^(n−1)·|R_1 − φ| for n = 1..n_max, where
/// R_n = F_{n+1}/F_n is the ratio of consecutive Fibonacci numbers.
std::vector<ErrorBoundRow> golden_error_bound_check(std::size_t n_max);

/// A term of x_{k+1} = −b − c/x_k; std::nullopt is the pole (∞), reached
/// after a zero term. The step after a pole is −b.
using MonicTerm = std::optional<Rational>;

/// The trace starts at x0 (zero is allowed and produces a pole next).
std::vector<MonicTerm> iterate_monic(const Rational& b, const Rational& c, const Rational& x0,
                                     std::size_t n_terms);

enum class MonicVerdict {
  TotallyDivergentBZero,
  OscillatoryDivergent,
  ConvergesDoubleRoot,
  ConvergesLargerRoot,
};

const char* to_string(MonicVerdict verdict) noexcept;

/// Convergence of the continued fraction −b − c/(−b − c/(−b − ...)) for the
/// monic quadratic x² + bx + c = 0.
struct MonicClassification {
  Rational b;
  Rational c;
  Rational discriminant;  ///< b² − 4c
  MonicVerdict verdict = MonicVerdict::TotallyDivergentBZero;
  /// The limit: the double root, or the root of larger magnitude. Rational
  /// when the discriminant is the square of a rational.
  std::optional<QuadraticNumber> root;
  /// |smaller root| / |larger root|, set for ConvergesLargerRoot (1 for the
  /// double root). Smaller means faster convergence.
  std::optional<QuadraticNumber> ratio;
};

MonicClassification classify_monic(const Rational& b, const Rational& c);

}  // namespace cfrac
