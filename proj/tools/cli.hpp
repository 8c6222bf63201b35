#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cgt::cli {

/// Exit codes of the `cgt` tool.
enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kUsage = 2,
    kResource = 3,
    kShape = 4,
};

/// Runs one `cgt` invocation. `args` excludes the program name. Results go
/// to `out`, diagnostics to `err`; the return value is the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cgt::cli
