#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordprox::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  /// `check` found a failing property or `equiv` found differing graphs.
  kCheckFailed = 1,
  kUsage = 2,
  /// The input was read but is malformed or violates an order/geometry rule.
  kValidation = 3,
  kIo = 4,
};

/// Runs one `ordprox` invocation. `args` excludes the program name. Primary
/// output goes to `out` unless `--output` names a file; warnings and the
/// machine-readable error object go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordprox::cli
