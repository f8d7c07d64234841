#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pencil::cli {

enum ExitCode { kOk = 0, kUsage = 1, kLimit = 2, kInconsistent = 3 };

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pencil::cli
