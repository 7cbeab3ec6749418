#pragma once

#include <iosfwd>

namespace detideal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitGuardRefused = 3;

/// Parses arguments and runs one subcommand. `in` backs the "-" input.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace detideal::cli
