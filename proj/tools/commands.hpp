#pragma once

#include <iosfwd>

namespace wreathfock::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kResourceCap = 3,
};

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace wreathfock::cli
