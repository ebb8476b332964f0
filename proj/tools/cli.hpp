#pragma once

#include <iosfwd>

namespace propkit::cli {

enum ExitCode : int {
  kOk = 0,
  kLightcone = 2,
  kUsage = 64,
  kDataFailure = 65,
};

/// The whole command line tool. Data goes to out (or --output), diagnostics
/// to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace propkit::cli
