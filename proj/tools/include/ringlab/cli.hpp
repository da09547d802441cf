#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringlab {

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitInputError = 2;

/// Runs the tool on args (without the program name). Documents go to out,
/// diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringlab
