#pragma once

#include <compare>
#include <string>

#include "cfrac/bigint.hpp"
#include "cfrac/rational.hpp"

namespace cfrac {

/// Exact element a + b·√d of the real quadratic field Q(√d).
///
/// d is kept positive and not a perfect square whenever b != 0; a perfect
/// square radicand is folded into the rational part on construction. Numbers
/// with b == 0 are plain rationals and combine with any field. Radicands that
/// differ by a square factor (√8 and √2) are moved onto the smaller one; other
/// mixed radicands throw Error(InvalidArgument).
///
/// Signs and orderings are decided exactly (sign analysis, then comparing
/// a² with b²·d), never through floating point.
class QuadraticNumber {
 public:
  QuadraticNumber() : QuadraticNumber(Rational(0)) {}
  QuadraticNumber(Rational rational);  // NOLINT(google-explicit-constructor)
  QuadraticNumber(long value) : QuadraticNumber(Rational(value)) {}  // NOLINT
  QuadraticNumber(Rational a, Rational b, BigInt d);

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& irrational_coefficient() const noexcept { return b_; }
  const BigInt& radicand() const noexcept { return d_; }
  bool is_rational() const { return b_.is_zero(); }

  int sign() const;
  QuadraticNumber conjugate() const { return QuadraticNumber(a_, -b_, d_); }
  QuadraticNumber abs() const { return sign() < 0 ? -*this : *this; }
  /// a² − b²d; the product with the conjugate.
  Rational norm() const;

  /// Rounded half away from zero to `digits` places, exact.
  std::string to_decimal(unsigned digits) const;
  /// Naive a + b·√d in double precision; suffers cancellation, display only.
  double to_double() const;
  /// e.g. "1/2 + 1/2*sqrt(5)".
  std::string str() const;

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
  /// Throws Error(DivisionByZero) on a zero divisor.
  friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator-(const QuadraticNumber& x) {
    return QuadraticNumber(-x.a_, -x.b_, x.d_);
  }

  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y);
  friend std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y);

 private:
  Rational a_;
  Rational b_;
  BigInt d_;
};

QuadraticNumber pow(const QuadraticNumber& base, unsigned exponent);

/// floor(a + b·√d), exact.
BigInt floor(const QuadraticNumber& value);

}  // namespace cfrac
