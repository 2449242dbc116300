#include "cfrac/surd.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "cfrac/errors.hpp"

namespace cfrac {
namespace {

// floor((P + √D) / Q) given s = floor(√D); √D lies strictly between s and s + 1.
BigInt surd_floor(const BigInt& p, const BigInt& root_floor, const BigInt& q) {
  if (q > 0) return floor_div(BigInt(p + root_floor), q);
  return floor_div(BigInt(-p - root_floor - 1), BigInt(-q));
}

// Last two convergents (p_n, q_n) and (p_{n-1}, q_{n-1}) of a nonempty list,
// with the recurrence seeds standing in for index -1.
struct ConvergentPair {
  BigInt p, q, p_prev, q_prev;
};

ConvergentPair last_two_convergents(const std::vector<BigInt>& terms) {
  ConvergentPair out{1, 0, 0, 1};
  for (const BigInt& a : terms) {
    BigInt p = a * out.p + out.p_prev;
    BigInt q = a * out.q + out.q_prev;
    out.p_prev = std::move(out.p);
    out.q_prev = std::move(out.q);
    out.p = std::move(p);
    out.q = std::move(q);
  }
  return out;
}

}  // namespace

QuadraticSurd::QuadraticSurd(BigInt p, BigInt d, BigInt q)
    : p_(std::move(p)), d_(std::move(d)), q_(std::move(q)) {
  if (q_ == 0) throw Error(ErrorKind::ZeroQ, "surd denominator Q must be nonzero");
  if (d_ <= 0) throw Error(ErrorKind::NonPositiveRadicand, "surd radicand D must be positive");
  if (is_perfect_square(d_)) {
    throw Error(ErrorKind::PerfectSquare,
                "D = " + d_.get_str() + " is a perfect square; the value is rational");
  }
  BigInt residue = d_ - p_ * p_;
  if (residue % q_ != 0) {
    BigInt scale = abs(q_);
    p_ *= scale;
    d_ *= scale * scale;
    q_ *= scale;
  }
}

QuadraticSurd QuadraticSurd::conjugate() const { return QuadraticSurd(-p_, d_, -q_); }

std::array<BigInt, 3> QuadraticSurd::minimal_polynomial() const {
  // Q·x − P = √D  =>  Q²x² − 2PQ·x + (P² − D) = 0
  BigInt a = q_ * q_;
  BigInt b = -2 * p_ * q_;
  BigInt c = p_ * p_ - d_;
  BigInt g = gcd(gcd(a, b), c);
  return {BigInt(a / g), BigInt(b / g), BigInt(c / g)};
}

QuadraticSurd QuadraticSurd::canonical() const {
  auto [a, b, c] = minimal_polynomial();
  BigInt p, d, q;
  if (b % 2 == 0) {
    BigInt half_b = b / 2;
    p = -half_b;
    d = half_b * half_b - a * c;
    q = a;
  } else {
    p = -b;
    d = b * b - 4 * a * c;
    q = 2 * a;
  }
  // The minimal polynomial's "+" root has a positive irrational part.
  if (q_ < 0) {
    p = -p;
    q = -q;
  }
  return QuadraticSurd(std::move(p), std::move(d), std::move(q));
}

QuadraticNumber QuadraticSurd::value() const {
  return QuadraticNumber(Rational(p_, q_), Rational(BigInt(1), q_), d_);
}

BigInt QuadraticSurd::floor() const { return surd_floor(p_, isqrt(d_), q_); }

std::string QuadraticSurd::str() const {
  const bool negative_root = q_ < 0;
  const BigInt p = negative_root ? BigInt(-p_) : p_;
  const BigInt q = abs(q_);
  const std::string root = "sqrt(" + d_.get_str() + ")";

  std::string numerator;
  if (p != 0) numerator = p.get_str();
  numerator += negative_root ? "-" : (p != 0 ? "+" : "");
  numerator += root;

  if (q == 1) return numerator;
  if (p == 0) return numerator + "/" + q.get_str();
  return "(" + numerator + ")/" + q.get_str();
}

bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
  return sgn(x.q_) == sgn(y.q_) && Rational(x.p_, x.q_) == Rational(y.p_, y.q_) &&
         Rational(x.d_, BigInt(x.q_ * x.q_)) == Rational(y.d_, BigInt(y.q_ * y.q_));
}

QuadraticSurd to_surd(const QuadraticNumber& value) {
  if (value.is_rational()) {
    throw Error(ErrorKind::InvalidArgument, "value " + value.str() + " is rational, not a surd");
  }
  const Rational& a = value.rational_part();
  const Rational& b = value.irrational_coefficient();
  // value = (N + C·√d) / L
  BigInt l = lcm(a.denominator(), b.denominator());
  BigInt n = a.numerator() * (l / a.denominator());
  BigInt c = b.numerator() * (l / b.denominator());
  BigInt d = c * c * value.radicand();
  if (c > 0) return QuadraticSurd(std::move(n), std::move(d), std::move(l)).canonical();
  return QuadraticSurd(BigInt(-n), std::move(d), BigInt(-l)).canonical();
}

PeriodicCF::PeriodicCF(std::vector<BigInt> pre_period, std::vector<BigInt> period)
    : pre_period_(std::move(pre_period)), period_(std::move(period)) {
  if (period_.empty()) throw Error(ErrorKind::Invariant, "period must not be empty");
  for (std::size_t i = 1; i < pre_period_.size(); ++i) {
    if (pre_period_[i] < 1) {
      throw Error(ErrorKind::Invariant, "pre-period term " + std::to_string(i) + " is " +
                                            pre_period_[i].get_str() + ", must be >= 1");
    }
  }
  for (std::size_t i = 0; i < period_.size(); ++i) {
    if (period_[i] < 1) {
      throw Error(ErrorKind::Invariant, "period term " + std::to_string(i) + " is " +
                                            period_[i].get_str() + ", must be >= 1");
    }
  }

  const std::size_t h = period_.size();
  for (std::size_t k = 1; k < h; ++k) {
    if (h % k != 0) continue;
    bool repeats = true;
    for (std::size_t i = k; i < h && repeats; ++i) repeats = period_[i] == period_[i % k];
    if (repeats) {
      period_.resize(k);
      break;
    }
  }

  while (!pre_period_.empty() && pre_period_.back() == period_.back()) {
    std::rotate(period_.begin(), period_.end() - 1, period_.end());
    pre_period_.pop_back();
  }
}

const BigInt& PeriodicCF::term(std::size_t index) const {
  if (index < pre_period_.size()) return pre_period_[index];
  return period_[(index - pre_period_.size()) % period_.size()];
}

std::vector<BigInt> PeriodicCF::terms(std::size_t count) const {
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(term(i));
  return out;
}

PeriodicCF expand_surd(const QuadraticSurd& surd, std::size_t max_terms) {
  struct StateLess {
    bool operator()(const std::pair<BigInt, BigInt>& x, const std::pair<BigInt, BigInt>& y) const {
      int c = cmp(x.first, y.first);
      return c != 0 ? c < 0 : cmp(x.second, y.second) < 0;
    }
  };

  const BigInt& d = surd.D();
  const BigInt root_floor = isqrt(d);
  BigInt p = surd.P();
  BigInt q = surd.Q();
  std::map<std::pair<BigInt, BigInt>, std::size_t, StateLess> seen;
  std::vector<BigInt> terms;

  while (true) {
    auto [it, inserted] = seen.emplace(std::pair{p, q}, terms.size());
    if (!inserted) {
      const auto start = static_cast<std::ptrdiff_t>(it->second);
      std::vector<BigInt> pre(terms.begin(), terms.begin() + start);
      std::vector<BigInt> period(terms.begin() + start, terms.end());
      return PeriodicCF(std::move(pre), std::move(period));
    }
    if (terms.size() >= max_terms) {
      throw Error(ErrorKind::PeriodNotFound, "no repeated state within " +
                                                 std::to_string(max_terms) + " terms");
    }
    BigInt a = surd_floor(p, root_floor, q);
    p = a * q - p;
    q = (d - p * p) / q;  // exact: Q | (D − P²) is preserved
    terms.push_back(std::move(a));
  }
}

PeriodicCF sqrt_cf(const BigInt& n, std::size_t max_terms) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "sqrt_cf needs n >= 2");
  if (is_perfect_square(n)) {
    throw Error(ErrorKind::PerfectSquare, n.get_str() + " is a perfect square");
  }
  return expand_surd(QuadraticSurd(0, n, 1), max_terms);
}

QuadraticSurd periodic_to_surd(const PeriodicCF& pcf) {
  // Purely periodic tail y = [b1; ..., bh, y] = (p·y + p') / (q·y + q'), so
  // q·y² + (q' − p)·y − p' = 0. Its root > 1 takes the + sign.
  const ConvergentPair tail = last_two_convergents(pcf.period());
  BigInt linear = tail.p - tail.q_prev;
  BigInt discriminant = linear * linear + 4 * tail.q * tail.p_prev;
  BigInt two_q = 2 * tail.q;
  const QuadraticNumber y(Rational(linear, two_q), Rational(BigInt(1), two_q), discriminant);

  if (pcf.pre_period().empty()) return to_surd(y);

  // x = [a0; ..., ak, y] = (P_k·y + P_{k-1}) / (Q_k·y + Q_{k-1})
  const ConvergentPair head = last_two_convergents(pcf.pre_period());
  auto lift = [](const BigInt& v) { return QuadraticNumber(Rational(v)); };
  return to_surd((lift(head.p) * y + lift(head.p_prev)) / (lift(head.q) * y + lift(head.q_prev)));
}

std::string decimal_approx(const QuadraticSurd& surd, unsigned digits) {
  return surd.value().to_decimal(digits);
}

}  // namespace cfrac
