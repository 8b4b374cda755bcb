#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace climakg::cli {

// Parses argv (without the program name) and runs the selected subcommand.
// Exit codes: 0 success, 1 runtime/data error, 2 usage or parse error.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace climakg::cli
