#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyspec::cli {

/// Exit codes: 0 computed and the property holds, 2 computed and the
/// property fails (violations, certificate, negative verdict, failed
/// verification), 1 input or usage error.
enum ExitCode : int { kOk = 0, kInputError = 1, kPropertyFails = 2 };

/// args[0] is the program name. JSON goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyspec::cli
