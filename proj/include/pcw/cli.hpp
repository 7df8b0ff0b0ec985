#ifndef PCW_CLI_HPP
#define PCW_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace pcw {

// Exit codes of the command line tool.
enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitUsage = 2 };

// Runs one command. args excludes the program name. Setting PCW_FORMAT=json
// in the environment makes JSON the default output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcw

#endif  // PCW_CLI_HPP
