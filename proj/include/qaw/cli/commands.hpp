#pragma once

#include <iosfwd>

namespace qaw::cli {

/// Exit codes of the qaw executable.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,
  kExitNumerical = 2,
  kExitUsage = 64,
  kExitDomain = 65,
  kExitIo = 66,
};

/// Entry point of `qaw eval|check|suite`; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qaw::cli
