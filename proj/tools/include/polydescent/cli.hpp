#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polydescent {

/// Runs one subcommand. Returns 0 on success, 1 when a check fails and 2 on
/// usage or input errors. argv[0] is the program name.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);
int run_command(const std::vector<std::string>& argv);

}  // namespace polydescent
