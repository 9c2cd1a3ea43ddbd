#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace niemeier::cli {

enum ExitCode : int { kOk = 0, kRefuted = 1, kInconclusive = 2 };

/// Runs the command line; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace niemeier::cli
