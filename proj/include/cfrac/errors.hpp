#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfrac {

enum class ErrorKind {
  ZeroDenominator,
  DivisionByZero,
  InsufficientCoefficients,
  InvalidArgument,
  PerfectSquare,
  NonPositiveRadicand,
  ZeroQ,
  PeriodNotFound,
  NoSolution,
  Syntax,
  Invariant,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base for every failure the library reports. `kind()` is stable and is what
/// callers (the CLI in particular) switch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the notation parser; `position()` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t position, const std::string& message)
      : Error(kind, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cfrac
