#pragma once

#include <iosfwd>

namespace cmm {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitConfig = 2,
  kExitConvergence = 3,
  kExitIo = 4,
  kExitValidation = 5,
};

/// Entry point of the `cmm` tool; returns the process exit code.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace cmm
