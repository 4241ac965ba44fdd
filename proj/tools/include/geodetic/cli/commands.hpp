#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geodetic::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitInternal = 3,
};

/// Entry point of the `geodetic` tool. args excludes the program name.
/// Subcommands: generate, solve, bench, export-ilp, verify.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geodetic::cli
