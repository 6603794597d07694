#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mingens::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerificationFailed = 2, kBudgetExhausted = 3 };

struct DispatchOptions {
  // Print human tables instead of JSON where a command has one.
  bool tty = false;
};

// Runs one command line (without the program name). JSON or tables go to
// `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const DispatchOptions& options = {});

}  // namespace mingens::cli
