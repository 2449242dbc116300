#include "cfrac/finite_cf.hpp"

#include <string>
#include <utility>

#include "cfrac/errors.hpp"

namespace cfrac {

FiniteCF::FiniteCF(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    throw Error(ErrorKind::Invariant, "continued fraction needs at least one term");
  }
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    if (coefficients_[i] < 1) {
      throw Error(ErrorKind::Invariant, "term " + std::to_string(i) + " is " +
                                            coefficients_[i].get_str() + ", must be >= 1");
    }
  }
}

const Convergent& ConvergentRecurrence::push(const BigInt& coefficient) {
  BigInt p = coefficient * p_prev_ + p_prev2_;
  BigInt q = coefficient * q_prev_ + q_prev2_;
  p_prev2_ = std::move(p_prev_);
  q_prev2_ = std::move(q_prev_);
  p_prev_ = p;
  q_prev_ = q;
  current_ = Convergent{count_, std::move(p), std::move(q)};
  ++count_;
  return current_;
}

FiniteCF expand_rational(const Rational& value) {
  std::vector<BigInt> terms;
  BigInt num = value.numerator();
  BigInt den = value.denominator();
  while (den != 0) {
    BigInt a = floor_div(num, den);
    BigInt rem = num - a * den;
    terms.push_back(std::move(a));
    num = std::move(den);
    den = std::move(rem);
  }
  return FiniteCF(std::move(terms));
}

Rational evaluate(const FiniteCF& cf) {
  auto terms = cf.coefficients();
  BigInt num = terms.back();
  BigInt den = 1;
  for (std::size_t i = terms.size() - 1; i-- > 0;) {
    BigInt next = terms[i] * num + den;
    den = std::move(num);
    num = std::move(next);
  }
  return Rational(std::move(num), std::move(den));
}

FiniteCF canonicalize(const FiniteCF& cf) {
  std::vector<BigInt> terms(cf.coefficients().begin(), cf.coefficients().end());
  if (terms.size() > 1 && terms.back() == 1) {
    terms.pop_back();
    terms.back() += 1;
  }
  return FiniteCF(std::move(terms));
}

std::vector<Convergent> convergents(std::span<const BigInt> coefficients, std::size_t count) {
  if (count == 0) throw Error(ErrorKind::InvalidArgument, "convergent count must be positive");
  if (count > coefficients.size()) {
    throw Error(ErrorKind::InsufficientCoefficients,
                "asked for " + std::to_string(count) + " convergents but only " +
                    std::to_string(coefficients.size()) + " coefficients are available");
  }
  std::vector<Convergent> out;
  out.reserve(count);
  ConvergentRecurrence recurrence;
  for (std::size_t i = 0; i < count; ++i) out.push_back(recurrence.push(coefficients[i]));
  return out;
}

}  // namespace cfrac
