#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boolinv::shell {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kResource = 3,
};

// Runs one command line (without the program name). Everything printed goes
// to `out` or `err`; nothing touches the process streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boolinv::shell
