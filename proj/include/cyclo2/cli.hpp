#pragma once

#include <string>
#include <vector>

namespace cyclo2::cli {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs the command line (argv without the program name). Output is a pure
/// function of the arguments and the optional --config file; exit codes:
/// 0 ok, 1 usage or input error, 2 verification failure.
CliResult run(const std::vector<std::string>& args);

}  // namespace cyclo2::cli
