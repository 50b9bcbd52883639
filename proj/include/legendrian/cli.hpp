#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace legendrian::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,
  kNotRealizable = 2,
  kInputError = 3,
  kGeometryFailure = 4,
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace legendrian::cli
