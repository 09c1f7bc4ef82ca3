#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kflag::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalidInput = 2,
    kNotRegular = 3,
    kInternalError = 4,
    kCounterexample = 5,
};

/// Runs one CLI invocation.  `args` excludes the program name.  A file
/// argument of "-" reads `in`; results go to `out`, diagnostics and progress
/// to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace kflag::cli
