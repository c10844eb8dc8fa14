#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sbpdct {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

/// Parses a signal file: one decimal sample per line, '#' starts a comment,
/// blank lines ignored.
std::vector<double> parse_signal(std::istream& in);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sbpdct
