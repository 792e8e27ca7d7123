#pragma once

#include <string>
#include <vector>

namespace bclass {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Runs one command line (without the program name). Exit codes: 0 for
// success / equivalent, 1 for not equivalent, 2 for errors.
CliResult run_cli(const std::vector<std::string>& args);

int cli_main(int argc, char** argv);

}  // namespace bclass
