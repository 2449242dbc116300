#include "cfrac/pell.hpp"

#include <string>

#include "cfrac/errors.hpp"
#include "cfrac/finite_cf.hpp"
#include "cfrac/surd.hpp"

namespace cfrac {
BigInt verify(const BigInt& n, const BigInt& x, const BigInt& y) { return x * x - n * y * y; }

PellSolution solve_fundamental(const BigInt& n) {
  const PeriodicCF expansion = sqrt_cf(n);
  // The first solution sits at index period_length − 1; scan one extra term.
  const std::size_t horizon = expansion.pre_period().size() + expansion.period().size();
  ConvergentRecurrence recurrence;
  for (std::size_t i = 0; i < horizon; ++i) {
    const Convergent& c = recurrence.push(expansion.term(i));
    const BigInt value = verify(n, c.p, c.q);
    if (value == 1 || value == -1) return PellSolution{n, c.p, c.q, value == 1 ? 1 : -1};
  }
  throw Error(ErrorKind::NoSolution, "no Pell solution within one period of sqrt(" +
                                         n.get_str() + "), expansion is inconsistent");
}

std::vector<PellSolution> solve_signed(const BigInt& n, std::size_t count, int sign) {
  if (sign != 1 && sign != -1) {
    throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1");
  }
  const PeriodicCF expansion = sqrt_cf(n);
  const std::size_t period = expansion.period().size();
  if (sign == -1 && period % 2 == 0) {
    throw Error(ErrorKind::NoSolution, "x^2 - " + n.get_str() +
                                           "*y^2 = -1 has no solutions (period length " +
                                           std::to_string(period) + " is even)");
  }

  std::vector<PellSolution> out;
  out.reserve(count);
  // Solutions recur once per period (even length) or every other period
  // (odd length), so 2·count periods are always enough.
  const std::size_t horizon = expansion.pre_period().size() + 2 * (count + 1) * period;
  ConvergentRecurrence recurrence;
  for (std::size_t i = 0; i < horizon && out.size() < count; ++i) {
    const Convergent& c = recurrence.push(expansion.term(i));
    if (verify(n, c.p, c.q) == sign) out.push_back(PellSolution{n, c.p, c.q, sign});
  }
  return out;
}

}  // namespace cfrac
