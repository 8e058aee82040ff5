#pragma once

#include <ostream>

namespace eqschubert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitMismatch = 3;

/// Entry point of the command-line tool; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eqschubert::cli
