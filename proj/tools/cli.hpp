#pragma once

#include <ostream>

namespace qsslab::cli {

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitVerificationFailure = 2;
inline constexpr int kExitUsage = 64;

/// Parses argv, dispatches one subcommand and writes its document to `out`
/// (or to --out). Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsslab::cli
