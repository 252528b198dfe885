#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hga::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kMalformedInput = 1,
  kInfeasibleInput = 2,
  kVerificationFailure = 3,
};

/// Runs one command line (args excludes the program name) and writes the
/// report to `out`, diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hga::cli
