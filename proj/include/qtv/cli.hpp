#pragma once

#include <iosfwd>

namespace qtv {

inline constexpr int kMaxDegree = 10;

/// Runs the command line; returns the process exit code
/// (0 success or pass, 1 check failure, 2 usage or configuration error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qtv
