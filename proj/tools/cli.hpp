#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace laakso::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_validation = 2;
inline constexpr int exit_resource = 3;
inline constexpr int exit_numerical = 4;

// Runs one command line (args excludes the program name). Primary output goes
// to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace laakso::cli
