//
// cli.hpp
//
// The `dmap` command line: cycles, badset, classify, word, staircase,
// raster and verify.
//

#pragma once

#include <iosfwd>

namespace dmap {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

// Parses argv and runs one subcommand, writing results to out and
// diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv);

}  // namespace dmap
