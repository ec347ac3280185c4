#pragma once

#include <ostream>

namespace qpsi::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitConfig = 2;

// Entry point of the qpsi command line tool. Subcommands: verify, squares,
// report, list. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qpsi::cli
