#pragma once

#include <cstddef>
#include <vector>

#include "cfrac/bigint.hpp"

namespace cfrac {

/// x² − n·y² = sign, with x, y > 0 and sign ∈ {+1, −1}.
struct PellSolution {
  BigInt n;
  BigInt x;
  BigInt y;
  int sign = 1;

  friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/// x² − n·y², exactly.
BigInt verify(const BigInt& n, const BigInt& x, const BigInt& y);

/// Smallest positive solution of x² − n·y² = ±1, found by scanning the
/// convergents of √n. It solves the −1 equation exactly when the period of
/// √n is odd. Throws Error(PerfectSquare) for square n and
/// Error(InvalidArgument) for n < 2.
PellSolution solve_fundamental(const BigInt& n);

/// First `count` solutions of x² − n·y² = `sign`, increasing in x, taken from
/// the convergents of √n. For sign = −1 and an even period there are none:
/// throws Error(NoSolution).
std::vector<PellSolution> solve_signed(const BigInt& n, std::size_t count, int sign);

/// First `count` solutions of x² − n·y² = +1.
inline std::vector<PellSolution> solve_positive(const BigInt& n, std::size_t count) {
  return solve_signed(n, count, +1);
}

}  // namespace cfrac
