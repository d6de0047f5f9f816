#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ipcover::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kUnproven = 2,  // also: certificate failed verification
  kInternal = 3,
};

/// Runs one `ipcover` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ipcover::cli
