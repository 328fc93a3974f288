#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skbounds {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitParseError = 2,
  kExitCapExceeded = 3,
};

/// Entry point of the `skbounds` tool; `args` excludes the program name.
/// With several input files the exit code is the largest one encountered.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace skbounds
