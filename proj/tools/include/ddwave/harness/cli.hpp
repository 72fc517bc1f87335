#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ddwave/harness/verify.hpp"

namespace ddwave::harness {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitInvalidParams = 2,
  kExitDomainTooShort = 3,
  kExitStepRejected = 4,
};

/// Parses and runs one subcommand (wave, region, atlas, simulate, sweep,
/// verify). `args` excludes the program name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const VerifyKernels& kernels = {});

}  // namespace ddwave::harness
