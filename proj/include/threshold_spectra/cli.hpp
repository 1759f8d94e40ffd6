#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace threshold_spectra {

/// Exit codes of the command line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInputError = 2,
  kExitNumericalError = 3,
};

/// Default largest vertex count for `verify`.
inline constexpr int kDefaultSweepCap = 16;
/// Environment variable that replaces the sweep cap.
inline constexpr const char* kSweepCapVariable = "THRESHOLD_SPECTRA_MAX_N";

/// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace threshold_spectra
