#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mesofringe::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Runs one command line (args excludes the program name). Tables go to
/// --out when given, otherwise to out; diagnostics and reports go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mesofringe::cli
