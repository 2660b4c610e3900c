#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdc::cli {

/// Exit statuses of the sdcode tool.
enum ExitStatus : int { kSuccess = 0, kCheckFailed = 1, kUsageError = 2 };

/// Runs `sdcode` with args (excluding the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sdc::cli
