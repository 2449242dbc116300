#include "cfrac/quadratic_field.hpp"

#include <algorithm>
#include <utility>

#include "cfrac/errors.hpp"

namespace cfrac {
namespace {

// b·√e equals b·√(d·e)/d · √d, so x moves to √d whenever d·e is a square.
QuadraticNumber over_radicand(const QuadraticNumber& x, const BigInt& d) {
  if (x.is_rational() || x.radicand() == d) return x;
  const BigInt product = d * x.radicand();
  if (!is_perfect_square(product)) {
    throw Error(ErrorKind::InvalidArgument, "operands live in different quadratic fields: sqrt(" +
                                                x.radicand().get_str() + ") vs sqrt(" +
                                                d.get_str() + ")");
  }
  return QuadraticNumber(x.rational_part(),
                         x.irrational_coefficient() * Rational(isqrt(product), d), d);
}

struct Aligned {
  QuadraticNumber x;
  QuadraticNumber y;
  BigInt d;
};

Aligned align(const QuadraticNumber& x, const QuadraticNumber& y) {
  BigInt d;
  if (x.is_rational()) {
    d = y.radicand();
  } else if (y.is_rational()) {
    d = x.radicand();
  } else {
    d = std::min(x.radicand(), y.radicand());
  }
  return {over_radicand(x, d), over_radicand(y, d), d};
}

std::string rational_text(const Rational& r) {
  return r.is_integer() ? r.numerator().get_str() : r.str();
}

}  // namespace

QuadraticNumber::QuadraticNumber(Rational rational) : a_(std::move(rational)), b_(0), d_(1) {}

QuadraticNumber::QuadraticNumber(Rational a, Rational b, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (b_.is_zero()) {
    d_ = 1;
    return;
  }
  if (d_ <= 0) throw Error(ErrorKind::NonPositiveRadicand, "radicand must be positive");
  if (is_perfect_square(d_)) {
    a_ += b_ * Rational(isqrt(d_));
    b_ = Rational(0);
    d_ = 1;
  }
}

int QuadraticNumber::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a² and b²d wins; they cannot tie for non-square d.
  return a_ * a_ > b_ * b_ * Rational(d_) ? sa : sb;
}

Rational QuadraticNumber::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

std::string QuadraticNumber::to_decimal(unsigned digits) const {
  const QuadraticNumber scaled = *this * QuadraticNumber(Rational(pow10(digits)));
  const Rational half(1, 2);
  BigInt rounded = sign() >= 0 ? floor(scaled + QuadraticNumber(half))
                               : BigInt(-floor(-scaled + QuadraticNumber(half)));
  return format_fixed_point(rounded, digits);
}

double QuadraticNumber::to_double() const {
  mpf_class root(d_, 256);
  mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
  return a_.to_double() + b_.to_double() * root.get_d();
}

std::string QuadraticNumber::str() const {
  if (is_rational()) return rational_text(a_);
  std::string root = "sqrt(" + d_.get_str() + ")";
  std::string irrational;
  if (b_ == Rational(1)) {
    irrational = root;
  } else if (b_ == Rational(-1)) {
    irrational = "-" + root;
  } else {
    irrational = rational_text(b_) + "*" + root;
  }
  if (a_.is_zero()) return irrational;
  if (b_.sign() < 0) return rational_text(a_) + " - " + irrational.substr(1);
  return rational_text(a_) + " + " + irrational;
}

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
  const Aligned v = align(x, y);
  return QuadraticNumber(v.x.a_ + v.y.a_, v.x.b_ + v.y.b_, v.d);
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
  const Aligned v = align(x, y);
  return QuadraticNumber(v.x.a_ - v.y.a_, v.x.b_ - v.y.b_, v.d);
}

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
  const Aligned v = align(x, y);
  return QuadraticNumber(v.x.a_ * v.y.a_ + v.x.b_ * v.y.b_ * Rational(v.d),
                         v.x.a_ * v.y.b_ + v.x.b_ * v.y.a_, v.d);
}

QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (y.sign() == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
  const Rational n = y.norm();
  const QuadraticNumber numerator = x * y.conjugate();
  return QuadraticNumber(numerator.a_ / n, numerator.b_ / n, numerator.d_);
}

bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.a_ != y.a_ || x.b_.sign() != y.b_.sign()) return false;
  if (x.d_ == y.d_) return x.b_ == y.b_;
  // b·√d = b'·√d' with equal signs iff b²·d = b'²·d'
  return x.b_ * x.b_ * Rational(x.d_) == y.b_ * y.b_ * Rational(y.d_);
}

std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

QuadraticNumber pow(const QuadraticNumber& base, unsigned exponent) {
  QuadraticNumber result(Rational(1));
  QuadraticNumber square = base;
  while (exponent != 0) {
    if (exponent & 1U) result = result * square;
    exponent >>= 1U;
    if (exponent != 0) square = square * square;
  }
  return result;
}

BigInt floor(const QuadraticNumber& value) {
  const Rational& a = value.rational_part();
  const Rational& b = value.irrational_coefficient();
  if (b.is_zero()) return floor(a);
  // value = (N + B·√d) / L with integers N, B and L > 0.
  BigInt l = lcm(a.denominator(), b.denominator());
  BigInt n = a.numerator() * (l / a.denominator());
  BigInt big_b = b.numerator() * (l / b.denominator());
  BigInt radicand = big_b * big_b * value.radicand();
  BigInt s = isqrt(radicand);  // s < √radicand < s + 1
  if (big_b > 0) return floor_div(BigInt(n + s), l);
  return floor_div(BigInt(n - s - 1), l);
}

}  // namespace cfrac
