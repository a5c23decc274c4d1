#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flipgraph {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;

/// Runs the flipgraph command line. args excludes the program name.
/// env_budget is the value of FLIPGRAPH_BUDGET, or null when unset.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const char* env_budget = nullptr);

}  // namespace flipgraph
