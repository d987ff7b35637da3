#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sparsify::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidParameters = 2,
  kNotSeriesParallel = 3,
  kInvariantFailure = 4,
};

// args excludes the program name. Machine output goes to `out`, diagnostics
// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// SPR_SPARSIFY_THREADS if set, otherwise the hardware count (at least 1).
int thread_budget();

}  // namespace sparsify::cli
