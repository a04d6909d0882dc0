#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rbs::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbs::cli
