#include "troplin/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <unistd.h>

int main(int argc, char** argv) {
  troplin::cli::Environment env;
  env.pretty = isatty(STDOUT_FILENO) != 0;
  if (const char* jobs = std::getenv("TROPLIN_JOBS")) {
    try {
      env.default_jobs = static_cast<unsigned>(std::max(1, std::stoi(jobs)));
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed TROPLIN_JOBS='" << jobs << "'\n";
    }
  }
  std::vector<std::string> args(argv + 1, argv + argc);
  return troplin::cli::run(args, std::cout, std::cerr, env);
}
