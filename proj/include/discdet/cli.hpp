#pragma once

#include <iosfwd>

namespace discdet {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFinding = 2;  // a FAIL line or a verify3 witness
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

/// Parses argv, runs one subcommand and returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace discdet
