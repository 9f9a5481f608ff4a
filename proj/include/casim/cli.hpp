#pragma once

#include <string>
#include <vector>

namespace casim {

/// Full command-line entry point (subcommand dispatch, config resolution,
/// file emission). Returns the process exit code.
int run_cli(const std::vector<std::string>& args);

}  // namespace casim
