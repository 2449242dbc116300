#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cfrac {

using BigInt = mpz_class;

/// Parses an optionally signed decimal integer. Throws Error(Syntax) on junk.
BigInt parse_bigint(std::string_view text);

inline std::string to_string(const BigInt& value) { return value.get_str(); }

inline int sign(const BigInt& value) { return sgn(value); }

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

/// False for negative n.
bool is_perfect_square(const BigInt& n);

/// Quotient rounded toward negative infinity; divisor must be nonzero.
BigInt floor_div(const BigInt& numerator, const BigInt& divisor);

BigInt pow10(unsigned long exponent);

/// Renders scaled / 10^digits, e.g. (1618, 3) -> "1.618", (-5, 2) -> "-0.05".
std::string format_fixed_point(const BigInt& scaled, unsigned digits);

}  // namespace cfrac
