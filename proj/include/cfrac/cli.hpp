#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cfrac/errors.hpp"

namespace cfrac::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;    // bad arguments or unparsable notation
inline constexpr int kExitDomain = 3;   // e.g. perfect square, zero denominator
inline constexpr int kExitBudget = 4;   // period not found within --max-terms

int exit_code_for(ErrorKind kind) noexcept;

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics to `err`; `in` is read when a notation argument is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
         std::ostream& err);

}  // namespace cfrac::cli
