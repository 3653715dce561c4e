#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace depknap::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInvalidInput = 1,
  kLimitExceeded = 2,
};

// Runs one command. `args` excludes the program name. Instance input named
// "-" is read from `in`; results go to `out` (or the --output file) and
// errors go to `err` as a one-line JSON object {"error": ..., "message": ...}.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace depknap::cli
