#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibsum::cli {

// Runs one CLI invocation. `args` excludes the program name. Data and
// status go to `out`, diagnostics to `err`. Returns the process exit code:
// 0 success, 1 failed verification, 2 usage or precondition error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibsum::cli
