#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evord {

/// Exit codes of `check`.
enum CheckStatus : int { kRealizable = 0, kUnrealizableCertified = 10, kInconclusive = 20 };

/// Full command-line front end. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace evord
