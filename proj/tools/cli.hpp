#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qmaps/scalar.hpp"

namespace qmaps::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,        ///< malformed flags, rationals or arity
  kNonPositive = 3,  ///< a coordinate <= 0
  kUnwritable = 4,   ///< export target cannot be opened
};

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// log10 of a positive rational, correctly rounded (half-even) to 12
/// digits after the decimal point.
std::string log10_fixed12(const Scalar& value);

}  // namespace qmaps::cli
