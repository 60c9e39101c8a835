#ifndef FLATLAND_TOOLS_CLI_HPP_
#define FLATLAND_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace flatland::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,
  kUsage = 2,
  kResourceLimit = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flatland::cli

#endif  // FLATLAND_TOOLS_CLI_HPP_
