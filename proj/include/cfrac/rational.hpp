#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "cfrac/bigint.hpp"

namespace cfrac {

/// Exact rational number, always stored reduced with a positive denominator.
/// Immutable apart from assignment; safe to share across threads.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt integer) : num_(std::move(integer)), den_(1) {}  // NOLINT
  /// Throws Error(ZeroDenominator) when `den` is zero.
  Rational(BigInt num, BigInt den);

  /// Accepts "p/q" or a bare integer "p", surrounding whitespace ignored.
  static Rational parse(std::string_view text);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  int sign() const { return sgn(num_); }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational abs() const;
  /// Throws Error(DivisionByZero) on zero.
  Rational reciprocal() const;

  /// "p/q", with q printed even when it is 1.
  std::string str() const;

  /// Nearest double; for measurement and display only.
  double to_double() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws Error(DivisionByZero) when `b` is zero.
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

  Rational& operator+=(const Rational& other) { return *this = *this + other; }
  Rational& operator-=(const Rational& other) { return *this = *this - other; }
  Rational& operator*=(const Rational& other) { return *this = *this * other; }
  Rational& operator/=(const Rational& other) { return *this = *this / other; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  struct Reduced {};
  Rational(BigInt num, BigInt den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  BigInt num_;
  BigInt den_;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Dispatching form of the four field operations.
Rational arith(const Rational& a, const Rational& b, ArithOp op);

/// Greatest integer <= value (true floor, also for negatives).
BigInt floor(const Rational& value);

/// Decimal rendering rounded half away from zero to `digits` places.
/// `to_decimal(5/3, 3) == "1.667"`.
std::string to_decimal(const Rational& value, unsigned digits);

}  // namespace cfrac
