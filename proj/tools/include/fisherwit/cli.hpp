#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fisherwit {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitValidation = 2, kExitNumerical = 3 };

// Runs the command line `args` (args[0] is the program name). CSV goes to
// `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fisherwit
