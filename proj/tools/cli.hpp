#ifndef TRIPSEM_TOOLS_CLI_HPP
#define TRIPSEM_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tripsem::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Thresholds used by the verify reports.
inline constexpr double kExactTolerance = 1e-9;
inline constexpr double kScopeTolerance = 1e-12;

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tripsem::cli

#endif  // TRIPSEM_TOOLS_CLI_HPP
