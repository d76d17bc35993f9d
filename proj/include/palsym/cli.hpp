#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace palsym::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsageError = 2,
};

/// Runs the palsym command line. `args` excludes the program name; `in`
/// feeds `sd --stdin` and interactive play.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace palsym::cli
