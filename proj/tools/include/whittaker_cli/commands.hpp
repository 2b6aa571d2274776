#pragma once

#include <ostream>

namespace whittaker::cli {

// Exit codes of the command-line tool.
enum ExitCode { kOk = 0, kVerificationFailed = 1, kBadInput = 2 };

// The whole command line. Output goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace whittaker::cli
