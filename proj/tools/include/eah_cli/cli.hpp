#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eah::cli {

/// Exit codes of the eah tool.
enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kUsage = 2,
  kNotMinimal = 3,
  kNotOnCurve = 4,
  kBoundFailed = 5,
  kInconclusive = 6,
  kRowValidation = 7,
  kNoRationalHalf = 8,
  kOracleMismatch = 9,
};

/// Runs the tool on args (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eah::cli
