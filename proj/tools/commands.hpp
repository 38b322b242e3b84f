#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chm::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kDegenerateMean = 2,
  kVerificationFailure = 3,
};

// Entry point shared by the executable and the tests. `args` excludes the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chm::cli
