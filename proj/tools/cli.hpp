#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace binpred::cli {

// Exit codes shared by every subcommand and output format.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // not a predictor, or counterexamples found
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

inline constexpr const char* kGuardEnv = "PADIC_BRUTE_GUARD";

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binpred::cli
