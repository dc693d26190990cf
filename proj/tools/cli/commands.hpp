#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace equitri::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitBadInput = 2,
  kExitDegenerate = 3,
  kExitIoFailure = 4,
};

// Entry point shared by the executable and the tests.  args excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace equitri::cli
