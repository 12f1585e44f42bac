#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace projsep::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,      // bad flags, config or input files
  kSink = 3,       // output could not be written
  kSingular = 4,   // a projection hit a singular embedded covariance
};

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace projsep::cli
