#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scycle {

/// Exit codes shared by the subcommands.
inline constexpr int kExitPacking = 0;
inline constexpr int kExitPass = 0;
inline constexpr int kExitHittingSet = 1;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

/// Entry point of the `scycle` tool; `args` excludes the program name.
///   solve <instance> [--out F] [--trace] [--text]
///   verify <instance> <report> [--cap N]
///   gen <gnp|cubic|grid|union-of-cliques> [params] [--seed N] [--out F]
///   oracle <instance> [--cap N]
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scycle
