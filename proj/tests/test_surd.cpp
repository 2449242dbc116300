#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "printers.hpp"
#include "cfrac/errors.hpp"
#include "cfrac/finite_cf.hpp"
#include "cfrac/surd.hpp"

namespace cfrac {
namespace {

std::vector<BigInt> ints(std::initializer_list<long> values) {
  return std::vector<BigInt>(values.begin(), values.end());
}

PeriodicCF pcf(std::initializer_list<long> pre, std::initializer_list<long> period) {
  return PeriodicCF(ints(pre), ints(period));
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

// Oracle: a claimed expansion of √n is right if, over 40 terms, every
// convergent p/q satisfies |p² − n·q²| / q² < (2√n + 1)/(q·q_next), i.e. p/q is
// within 1/(q·q_next) of √n. Uses only integer arithmetic on the claim.
bool claimed_root_expansion_holds(long n, const std::vector<BigInt>& terms) {
  const auto list = convergents(terms, terms.size());
  const long bound_factor = 2 * static_cast<long>(std::sqrt(static_cast<double>(n))) + 3;
  for (std::size_t i = 0; i + 1 < list.size(); ++i) {
    const BigInt& p = list[i].p;
    const BigInt& q = list[i].q;
    BigInt residual = abs(BigInt(p * p - n * q * q));
    // residual / q² < bound / (q·q_next)  <=>  residual·q_next < bound·q
    if (!(residual * list[i + 1].q < bound_factor * q)) return false;
  }
  return true;
}

TEST(QuadraticSurdTest, Construction) {
  const QuadraticSurd root2(0, 2, 1);
  EXPECT_EQ(root2.P(), 0);
  EXPECT_EQ(root2.D(), 2);
  EXPECT_EQ(root2.Q(), 1);

  const QuadraticSurd golden(1, 5, 2);
  EXPECT_EQ(golden.str(), "(1+sqrt(5))/2");

  // (1 + √2)/2 needs scaling to keep Q | D − P²
  const QuadraticSurd scaled(1, 2, 2);
  EXPECT_EQ(scaled.P(), 2);
  EXPECT_EQ(scaled.D(), 8);
  EXPECT_EQ(scaled.Q(), 4);
  EXPECT_EQ(scaled.value(), QuadraticNumber(Rational(1, 2), Rational(1, 2), 2));
}

TEST(QuadraticSurdTest, ConstructionErrors) {
  EXPECT_EQ(kind_of([] { QuadraticSurd(0, 4, 1); }), ErrorKind::PerfectSquare);
  EXPECT_EQ(kind_of([] { QuadraticSurd(0, -3, 1); }), ErrorKind::NonPositiveRadicand);
  EXPECT_EQ(kind_of([] { QuadraticSurd(0, 0, 1); }), ErrorKind::NonPositiveRadicand);
  EXPECT_EQ(kind_of([] { QuadraticSurd(1, 5, 0); }), ErrorKind::ZeroQ);
}

TEST(QuadraticSurdTest, Conjugate) {
  const QuadraticSurd golden(1, 5, 2);
  EXPECT_EQ(golden.conjugate().str(), "(1-sqrt(5))/2");
  EXPECT_EQ(golden.conjugate().conjugate(), golden);
  EXPECT_EQ(QuadraticSurd(1, 2, 1).conjugate().str(), "1-sqrt(2)");
  EXPECT_EQ(QuadraticSurd(1, 2, 1).conjugate().value(),
            QuadraticNumber(Rational(1), Rational(-1), 2));
}

TEST(QuadraticSurdTest, ValueEqualityIgnoresRepresentation) {
  EXPECT_EQ(QuadraticSurd(2, 8, 2), QuadraticSurd(1, 2, 1));
  EXPECT_EQ(QuadraticSurd(0, 8, 2), QuadraticSurd(0, 2, 1));
  EXPECT_FALSE(QuadraticSurd(1, 2, 1) == QuadraticSurd(1, 2, 1).conjugate());
  EXPECT_EQ(QuadraticSurd(2, 8, 2).canonical().str(), "1+sqrt(2)");
}

TEST(QuadraticSurdTest, ConjugatesShareMinimalPolynomial) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> p_dist(-40, 40), d_dist(2, 300), q_dist(1, 40);
  int checked = 0;
  while (checked < 400) {
    const long d = d_dist(rng);
    if (is_perfect_square(BigInt(d))) continue;
    const long q = q_dist(rng) * (rng() % 2 ? 1 : -1);
    const QuadraticSurd s(p_dist(rng), d, q);
    const auto poly = s.minimal_polynomial();
    EXPECT_GT(poly[0], 0);
    EXPECT_EQ(poly, s.conjugate().minimal_polynomial());
    for (const QuadraticNumber& root : {s.value(), s.conjugate().value()}) {
      const QuadraticNumber residual = QuadraticNumber(Rational(poly[0])) * root * root +
                                       QuadraticNumber(Rational(poly[1])) * root +
                                       QuadraticNumber(Rational(poly[2]));
      EXPECT_EQ(residual.sign(), 0);
    }
    EXPECT_EQ(s.conjugate().conjugate(), s);
    EXPECT_EQ(s.canonical(), s);
    ++checked;
  }
}

TEST(PeriodicCFTest, NormalizesToMinimalForm) {
  EXPECT_EQ(pcf({1}, {2, 2}), pcf({1}, {2}));
  EXPECT_EQ(pcf({1, 2}, {2}), pcf({1}, {2}));
  EXPECT_EQ(pcf({3, 1, 1}, {1, 1, 6, 1, 1}), pcf({3}, {1, 1, 1, 1, 6}));
  EXPECT_EQ(pcf({2}, {2}), pcf({}, {2}));
  EXPECT_EQ(pcf({0}, {1}).pre_period(), ints({0}));
}

TEST(PeriodicCFTest, RejectsInvalidTerms) {
  EXPECT_THROW(pcf({1}, {}), Error);
  EXPECT_THROW(pcf({1, 0}, {2}), Error);
  EXPECT_THROW(pcf({}, {-1}), Error);
  EXPECT_NO_THROW(pcf({-4}, {2}));
}

TEST(PeriodicCFTest, Terms) {
  const PeriodicCF root13 = pcf({3}, {1, 1, 1, 1, 6});
  EXPECT_EQ(root13.terms(8), ints({3, 1, 1, 1, 1, 6, 1, 1}));
}

TEST(ExpandSurdTest, KnownExpansions) {
  EXPECT_EQ(expand_surd(QuadraticSurd(0, 2, 1)), pcf({1}, {2}));
  EXPECT_EQ(expand_surd(QuadraticSurd(1, 5, 2)), pcf({}, {1}));
  EXPECT_EQ(expand_surd(QuadraticSurd(1, 2, 1)), pcf({}, {2}));
}

TEST(ExpandSurdTest, Root13AgainstSquaringOracle) {
  const PeriodicCF claimed = pcf({3}, {1, 1, 1, 1, 6});
  ASSERT_TRUE(claimed_root_expansion_holds(13, claimed.terms(40)));
  // A near miss is rejected by the same oracle.
  ASSERT_FALSE(claimed_root_expansion_holds(13, pcf({3}, {1, 1, 1, 1, 5}).terms(40)));
  EXPECT_EQ(expand_surd(QuadraticSurd(0, 13, 1)), claimed);
}

TEST(ExpandSurdTest, BudgetExhaustion) {
  EXPECT_EQ(kind_of([] { expand_surd(QuadraticSurd(0, 2, 1), 1); }), ErrorKind::PeriodNotFound);
  EXPECT_NO_THROW(expand_surd(QuadraticSurd(0, 2, 1), 2));
  EXPECT_EQ(kind_of([] { sqrt_cf(BigInt(94), 10); }), ErrorKind::PeriodNotFound);
}

TEST(SqrtCFTest, Examples) {
  EXPECT_EQ(sqrt_cf(BigInt(2)), pcf({1}, {2}));
  ASSERT_TRUE(claimed_root_expansion_holds(3, pcf({1}, {1, 2}).terms(40)));
  EXPECT_EQ(sqrt_cf(BigInt(3)), pcf({1}, {1, 2}));
  EXPECT_EQ(kind_of([] { sqrt_cf(BigInt(9)); }), ErrorKind::PerfectSquare);
  EXPECT_EQ(kind_of([] { sqrt_cf(BigInt(1)); }), ErrorKind::PerfectSquare);
  EXPECT_EQ(kind_of([] { sqrt_cf(BigInt(-2)); }), ErrorKind::InvalidArgument);
}

TEST(SqrtCFTest, StructureUpTo1000) {
  for (long n = 2; n <= 1000; ++n) {
    if (is_perfect_square(BigInt(n))) continue;
    const PeriodicCF expansion = sqrt_cf(BigInt(n));
    const BigInt root = isqrt(BigInt(n));
    ASSERT_EQ(expansion.pre_period(), std::vector<BigInt>{root}) << n;
    const auto& period = expansion.period();
    EXPECT_EQ(period.back(), 2 * root) << n;
    for (std::size_t i = 0, j = period.size() - 2; i + 1 < period.size() && i < j; ++i, --j) {
      EXPECT_EQ(period[i], period[j]) << "palindrome broken for " << n;
    }
  }
}

TEST(PeriodicToSurdTest, KnownValues) {
  const QuadraticSurd root2 = periodic_to_surd(pcf({1}, {2}));
  EXPECT_EQ(root2.P(), 0);
  EXPECT_EQ(root2.D(), 2);
  EXPECT_EQ(root2.Q(), 1);

  const QuadraticSurd golden = periodic_to_surd(pcf({}, {1}));
  EXPECT_EQ(golden.P(), 1);
  EXPECT_EQ(golden.D(), 5);
  EXPECT_EQ(golden.Q(), 2);

  const QuadraticSurd silver = periodic_to_surd(pcf({}, {2}));
  EXPECT_EQ(silver.str(), "1+sqrt(2)");
}

TEST(PeriodicToSurdTest, LagrangeRoundTripRandomSurds) {
  std::mt19937_64 rng(1770);
  std::uniform_int_distribution<long> p_dist(-50, 50), d_dist(2, 200), q_dist(-50, 50);
  int checked = 0;
  while (checked < 5000) {
    const long d = d_dist(rng);
    const long q = q_dist(rng);
    const long p = p_dist(rng);
    if (q == 0 || is_perfect_square(BigInt(d)) || (d - p * p) % q != 0) continue;
    const QuadraticSurd s(p, d, q);
    const PeriodicCF expansion = expand_surd(s);
    ASSERT_EQ(periodic_to_surd(expansion), s) << s.str();
    ++checked;
  }
}

TEST(PeriodicToSurdTest, InverseRoundTripRandomPeriodic) {
  std::mt19937_64 rng(1768);
  std::uniform_int_distribution<long> head(-9, 9), term(1, 9);
  std::uniform_int_distribution<int> pre_len(0, 3), period_len(1, 6);
  for (int i = 0; i < 3000; ++i) {
    std::vector<BigInt> pre, period;
    const int k = pre_len(rng);
    for (int j = 0; j < k; ++j) pre.emplace_back(j == 0 ? head(rng) : term(rng));
    const int h = period_len(rng);
    for (int j = 0; j < h; ++j) period.emplace_back(term(rng));
    const PeriodicCF original(pre, period);
    const QuadraticSurd s = periodic_to_surd(original);
    ASSERT_EQ(expand_surd(s), original) << s.str();
  }
}

TEST(ConvergentApproximationTest, ExactBoundOnSurdConvergents) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> p_dist(-20, 20), d_dist(2, 150), q_dist(1, 20);
  int checked = 0;
  while (checked < 200) {
    const long d = d_dist(rng);
    if (is_perfect_square(BigInt(d))) continue;
    const QuadraticSurd s(p_dist(rng), d, q_dist(rng));
    const auto terms = expand_surd(s).terms(30);
    const auto list = convergents(terms, terms.size());
    const QuadraticNumber x = s.value();
    for (std::size_t n = 0; n + 1 < list.size(); ++n) {
      const QuadraticNumber gap = (x - QuadraticNumber(list[n].value())).abs();
      const Rational bound(BigInt(1), BigInt(list[n].q * list[n + 1].q));
      EXPECT_LT(gap, QuadraticNumber(bound));
    }
    ++checked;
  }
}

TEST(DecimalApproxTest, Examples) {
  EXPECT_EQ(decimal_approx(QuadraticSurd(1, 5, 2), 3), "1.618");
  EXPECT_EQ(decimal_approx(QuadraticSurd(1, 2, 1), 3), "2.414");
  EXPECT_EQ(decimal_approx(QuadraticSurd(0, 2, 1), 3), "1.414");
  EXPECT_EQ(decimal_approx(QuadraticSurd(1, 5, 2).conjugate(), 3), "-0.618");
  EXPECT_EQ(decimal_approx(QuadraticSurd(0, 2, 1), 20), "1.41421356237309504880");
}

TEST(DecimalApproxTest, AgreesWithBracketingConvergents) {
  // Consecutive convergents bracket the value and rounding is monotone, so
  // once two neighbours round alike the value rounds the same way.
  for (long n = 2; n <= 60; ++n) {
    if (is_perfect_square(BigInt(n))) continue;
    const QuadraticSurd s(0, n, 1);
    const auto terms = sqrt_cf(BigInt(n)).terms(200);
    const auto list = convergents(terms, terms.size());
    for (unsigned digits : {3u, 6u, 10u}) {
      std::size_t k = 0;
      while (to_decimal(list[k].value(), digits) != to_decimal(list[k + 1].value(), digits)) ++k;
      EXPECT_EQ(decimal_approx(s, digits), to_decimal(list[k].value(), digits)) << n;
    }
  }
}

}  // namespace
}  // namespace cfrac
