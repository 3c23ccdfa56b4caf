#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gnns/timing.hpp"

namespace gnns::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,  ///< bad flags or configuration
  kData = 2,   ///< unreadable or inconsistent input
};

/// Runs one `gnns` command line (without the program name). Reports and
/// partitions go to files named by the flags; a short summary goes to `out`
/// and diagnostics to `err`. `clock` times the optimisation calls only.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const Clock& clock = steady_clock());

}  // namespace gnns::cli
