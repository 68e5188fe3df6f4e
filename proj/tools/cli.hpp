#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turan::cli {

enum ExitCode : int {
  kPass = 0,
  kFailed = 1,
  kUsage = 2,
  kIo = 3,
};

/// Runs one command line (without the program name). The JSON report goes to
/// `out`, log lines and usage errors to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace turan::cli
