#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "cfrac/finite_cf.hpp"
#include "cfrac/surd.hpp"

namespace cfrac {

using ContinuedFraction = std::variant<FiniteCF, PeriodicCF>;

/// Bracket notation, whitespace insensitive:
///
///   [2;1,3,4]   [5]   [2,1,3,4]      finite; ';' or ',' after a0
///   [1;(2)]   [(1)]   [3;1,(1,6)]    periodic block in parentheses, last
///
/// Only a0 may be negative or zero. Throws ParseError with kind Syntax for
/// malformed text and kind Invariant for well-formed text that violates the
/// term constraints (a non-positive tail term, an empty period). The reported
/// position is a byte offset inside `text` (0 for empty input).
ContinuedFraction parse_cf(std::string_view text);

/// Canonical text: ';' after a0, ',' elsewhere, period in parentheses.
/// parse_cf(format_cf(x)) == x.
std::string format_cf(const FiniteCF& cf);
std::string format_cf(const PeriodicCF& cf);
std::string format_cf(const ContinuedFraction& cf);

}  // namespace cfrac
