#pragma once

#include <string>
#include <vector>

namespace dhs {

/// Dispatch the command line. Exit codes: 0 all requested checks pass,
/// 1 check failure, 2 usage error, 3 internal error.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, char** argv);

}  // namespace dhs
