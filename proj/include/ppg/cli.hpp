#ifndef PPG_CLI_HPP
#define PPG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ppg::cli {

/// Exit codes: 0 ok, 1 no solution / not an equilibrium, 2 error.
enum ExitCode : int { kOk = 0, kNone = 1, kError = 2 };

/// Runs one subcommand. `args` excludes the program name. Result documents
/// go to `out`, errors to `err`, and `in` is read when --input is absent.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ppg::cli

#endif  // PPG_CLI_HPP
