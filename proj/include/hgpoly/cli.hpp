#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hgpoly/error.hpp"

namespace hgpoly {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInputError = 2,
  kExitLimitExceeded = 3,
};

int exit_code_for(ErrorCode code);

/// Entry point of the `hgpoly` tool; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hgpoly
