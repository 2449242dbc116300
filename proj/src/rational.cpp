#include "cfrac/rational.hpp"

#include <string>

#include "cfrac/errors.hpp"

namespace cfrac {

Rational::Rational(BigInt num, BigInt den) {
  if (den == 0) throw Error(ErrorKind::ZeroDenominator, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  BigInt g = gcd(num, den);
  if (g != 1) {
    num /= g;
    den /= g;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

Rational Rational::abs() const { return Rational(cfrac::BigInt(::abs(num_)), den_, Reduced{}); }

Rational Rational::reciprocal() const {
  if (num_ == 0) throw Error(ErrorKind::DivisionByZero, "reciprocal of zero");
  if (num_ < 0) return Rational(BigInt(-den_), BigInt(-num_), Reduced{});
  return Rational(den_, num_, Reduced{});
}

std::string Rational::str() const { return num_.get_str() + "/" + den_.get_str(); }

double Rational::to_double() const {
  mpq_class q(num_, den_);
  return q.get_d();
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational(BigInt(a.num_ + b.num_), a.den_);
  return Rational(BigInt(a.num_ * b.den_ + b.num_ * a.den_), BigInt(a.den_ * b.den_));
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational(BigInt(a.num_ - b.num_), a.den_);
  return Rational(BigInt(a.num_ * b.den_ - b.num_ * a.den_), BigInt(a.den_ * b.den_));
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(BigInt(a.num_ * b.num_), BigInt(a.den_ * b.den_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
  return Rational(BigInt(a.num_ * b.den_), BigInt(a.den_ * b.num_));
}

Rational operator-(const Rational& a) { return Rational(BigInt(-a.num_), a.den_, Rational::Reduced{}); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(BigInt(a.num_ * b.den_), BigInt(b.num_ * a.den_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational arith(const Rational& a, const Rational& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown arithmetic operation");
}

BigInt floor(const Rational& value) { return floor_div(value.numerator(), value.denominator()); }

std::string to_decimal(const Rational& value, unsigned digits) {
  // round(|v|·10^d) half away from zero = floor((2·|num|·10^d + den) / (2·den))
  BigInt magnitude = ::abs(value.numerator());
  BigInt rounded = floor_div(BigInt(2 * magnitude * pow10(digits) + value.denominator()),
                             BigInt(2 * value.denominator()));
  if (value.sign() < 0) rounded = -rounded;
  return format_fixed_point(rounded, digits);
}

}  // namespace cfrac
