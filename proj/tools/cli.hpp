#pragma once

#include <ostream>

namespace catri::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `catri` tool with injectable streams so tests can
// capture output. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace catri::cli
