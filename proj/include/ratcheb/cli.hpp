#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratcheb {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitPrecondition = 2, kExitNumerical = 3 };

/// Runs one ratcheb subcommand. args excludes the program name. Results go
/// to out (or to --out FILE), diagnostics to err.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// argv entry point around cli_run with std::cout / std::cerr.
int cli_main(int argc, char** argv);

}  // namespace ratcheb
