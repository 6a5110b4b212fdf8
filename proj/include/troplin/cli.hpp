#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace troplin::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,         // I/O, schema, usage
  kDomainError = 2,        // cycle, overlapping sets, size cap
  kVerificationFailed = 3  // mec-verify inequality, rank-scan violation
};

struct Environment {
  // Pretty-print JSON documents (the binary sets this when stdout is a TTY).
  bool pretty = false;
  // Fallback for --jobs, normally from TROPLIN_JOBS.
  unsigned default_jobs = 1;
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

}  // namespace troplin::cli
