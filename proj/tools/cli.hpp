#ifndef SYNCALG_TOOLS_CLI_HPP
#define SYNCALG_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace syncalg::cli {

/// Process exit codes; stdout and these are the tool's whole contract.
enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kDeadlock = 2,
  kNotEquivalent = 3,
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace syncalg::cli

#endif // SYNCALG_TOOLS_CLI_HPP
