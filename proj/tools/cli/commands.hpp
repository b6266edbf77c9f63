#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monoseq::cli {

inline constexpr int kExitFeasible = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitError = 2;

// Runs the command line (args[0] is the program name). JSON goes to out,
// diagnostics to err. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monoseq::cli
