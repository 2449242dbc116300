#include "cfrac/errors.hpp"

namespace cfrac {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InsufficientCoefficients: return "InsufficientCoefficients";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::PerfectSquare: return "PerfectSquare";
    case ErrorKind::NonPositiveRadicand: return "NonPositiveRadicand";
    case ErrorKind::ZeroQ: return "ZeroQ";
    case ErrorKind::PeriodNotFound: return "PeriodNotFound";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::Invariant: return "InvariantError";
  }
  return "Unknown";
}

}  // namespace cfrac
