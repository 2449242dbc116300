#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cfrac/bigint.hpp"
#include "cfrac/rational.hpp"

namespace cfrac {

/// Simple continued fraction [a0; a1, ..., an] with a_i >= 1 for i >= 1.
/// a0 may be any integer, including zero or negative.
class FiniteCF {
 public:
  /// Throws Error(Invariant) on an empty list or a non-positive tail term.
  explicit FiniteCF(std::vector<BigInt> coefficients);

  std::span<const BigInt> coefficients() const noexcept { return coefficients_; }
  std::size_t size() const noexcept { return coefficients_.size(); }
  const BigInt& operator[](std::size_t i) const { return coefficients_[i]; }

  friend bool operator==(const FiniteCF&, const FiniteCF&) = default;

 private:
  std::vector<BigInt> coefficients_;
};

/// p/q = [a0; ..., a_index]. gcd(|p|, q) = 1 and q >= 1 follow from the
/// determinant identity.
struct Convergent {
  std::size_t index = 0;
  BigInt p;
  BigInt q;

  Rational value() const { return Rational(p, q); }
  friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// Incremental form of the fundamental recurrences
///   p_n = a_n p_{n-1} + p_{n-2},  q_n = a_n q_{n-1} + q_{n-2}
/// seeded with p_{-1} = 1, p_{-2} = 0, q_{-1} = 0, q_{-2} = 1.
/// Lets callers feed coefficients from an unbounded stream.
class ConvergentRecurrence {
 public:
  const Convergent& push(const BigInt& coefficient);
  /// Number of coefficients consumed so far.
  std::size_t count() const noexcept { return count_; }
  const Convergent& last() const noexcept { return current_; }

 private:
  std::size_t count_ = 0;
  BigInt p_prev_{1}, p_prev2_{0};
  BigInt q_prev_{0}, q_prev2_{1};
  Convergent current_;
};

/// Euclidean algorithm with floor steps. Output is canonical (no trailing 1
/// unless the result is the single term [1]).
FiniteCF expand_rational(const Rational& value);

/// Back-substitution from the innermost term.
Rational evaluate(const FiniteCF& cf);

/// [..., a, 1] -> [..., a+1]; idempotent and value preserving.
FiniteCF canonicalize(const FiniteCF& cf);

/// First `count` convergents of `coefficients`, which may be a prefix of an
/// infinite expansion. Throws Error(InsufficientCoefficients) when
/// count > coefficients.size(), Error(InvalidArgument) when count == 0.
std::vector<Convergent> convergents(std::span<const BigInt> coefficients, std::size_t count);

inline std::vector<Convergent> convergents(const FiniteCF& cf) {
  return convergents(cf.coefficients(), cf.size());
}

}  // namespace cfrac
