#include "cfrac/iteration.hpp"

#include <utility>

#include "cfrac/errors.hpp"

namespace cfrac {

IterationTrace iterate_simple(const BigInt& kappa, std::size_t n_terms, Seeding seeding,
                              unsigned digits) {
  if (kappa < 1) throw Error(ErrorKind::InvalidArgument, "kappa must be >= 1");
  if (n_terms == 0) throw Error(ErrorKind::InvalidArgument, "need at least one term");

  const Rational k(kappa);
  IterationTrace trace{kappa, seeding, {}, {}, digits};
  trace.terms.reserve(n_terms);
  trace.terms.push_back(k);

  // Under Paper seeding t_1 = κ + 1 is a display term; the chain continues from t_0.
  Rational chain = k;
  if (seeding == Seeding::Paper && n_terms > 1) trace.terms.push_back(k + Rational(1));
  while (trace.terms.size() < n_terms) {
    chain = k + chain.reciprocal();
    trace.terms.push_back(chain);
  }

  trace.decimals.reserve(n_terms);
  for (const Rational& t : trace.terms) trace.decimals.push_back(to_decimal(t, digits));
  return trace;
}

QuadraticSurd limit_simple(const BigInt& kappa) {
  if (kappa < 1) throw Error(ErrorKind::InvalidArgument, "kappa must be >= 1");
  return QuadraticSurd(kappa, BigInt(kappa * kappa + 4), 2).canonical();
}

std::vector<ErrorBoundRow> golden_error_bound_check(std::size_t n_max) {
  const QuadraticNumber phi(Rational(1, 2), Rational(1, 2), 5);
  const QuadraticNumber inverse_phi = phi - QuadraticNumber(1);

  std::vector<ErrorBoundRow> rows;
  rows.reserve(n_max);
  BigInt fib_n = 1, fib_next = 1;  // F_1, F_2
  QuadraticNumber rhs;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const QuadraticNumber ratio(Rational(fib_next, fib_n));
    const QuadraticNumber lhs = (ratio - phi).abs();
    rhs = n == 1 ? lhs : rhs * inverse_phi;
    rows.push_back(ErrorBoundRow{n, lhs, rhs, lhs <= rhs});

    BigInt following = fib_n + fib_next;
    fib_n = std::move(fib_next);
    fib_next = std::move(following);
  }
  return rows;
}

std::vector<MonicTerm> iterate_monic(const Rational& b, const Rational& c, const Rational& x0,
                                     std::size_t n_terms) {
  std::vector<MonicTerm> trace;
  trace.reserve(n_terms);
  MonicTerm x = x0;
  for (std::size_t k = 0; k < n_terms; ++k) {
    trace.push_back(x);
    if (!x) {
      x = -b;  // −b − c/∞
    } else if (x->is_zero()) {
      x = std::nullopt;
    } else {
      x = -b - c / *x;
    }
  }
  return trace;
}

const char* to_string(MonicVerdict verdict) noexcept {
  switch (verdict) {
    case MonicVerdict::TotallyDivergentBZero: return "TotallyDivergent_bZero";
    case MonicVerdict::OscillatoryDivergent: return "OscillatoryDivergent";
    case MonicVerdict::ConvergesDoubleRoot: return "ConvergesDoubleRoot";
    case MonicVerdict::ConvergesLargerRoot: return "ConvergesLargerRoot";
  }
  return "Unknown";
}

MonicClassification classify_monic(const Rational& b, const Rational& c) {
  MonicClassification out{b, c, b * b - Rational(4) * c, {}, std::nullopt, std::nullopt};
  if (b.is_zero()) {
    out.verdict = MonicVerdict::TotallyDivergentBZero;
    return out;
  }
  const int disc_sign = out.discriminant.sign();
  if (disc_sign < 0) {
    out.verdict = MonicVerdict::OscillatoryDivergent;
    return out;
  }
  const Rational half(1, 2);
  if (disc_sign == 0) {
    out.verdict = MonicVerdict::ConvergesDoubleRoot;
    out.root = QuadraticNumber(-b * half);
    out.ratio = QuadraticNumber(1);
    return out;
  }

  // √(u/v) = √(u·v) / v; QuadraticNumber folds a perfect-square radicand away.
  const BigInt& u = out.discriminant.numerator();
  const BigInt& v = out.discriminant.denominator();
  const QuadraticNumber half_root(Rational(0), Rational(BigInt(1), BigInt(2 * v)), BigInt(u * v));
  const QuadraticNumber centre(-b * half);
  // The root of larger magnitude lies on the same side as −b/2.
  const QuadraticNumber larger = b.sign() < 0 ? centre + half_root : centre - half_root;
  const QuadraticNumber smaller = b.sign() < 0 ? centre - half_root : centre + half_root;

  out.verdict = MonicVerdict::ConvergesLargerRoot;
  out.root = larger;
  out.ratio = (smaller / larger).abs();
  return out;
}

}  // namespace cfrac
