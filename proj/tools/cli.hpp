#ifndef NSGP_TOOLS_CLI_HPP
#define NSGP_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace nsgp::cli {

/// Runs one CLI invocation; args exclude the program name.
/// Exit status: 0 on success, 2 on usage errors, 1 on domain errors or
/// failed verification.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace nsgp::cli

#endif  // NSGP_TOOLS_CLI_HPP
