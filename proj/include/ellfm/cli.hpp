#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ellfm/intersection_ring.hpp"

namespace ellfm {

enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 1,
    kExitHypothesis = 2,
    kExitInternal = 3,
};

/// Entry point of the `ellfm` command; writes results to `out` and
/// diagnostics to `err`, returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Human-readable divisor such as "-Θ + 3/2p*H".
std::string format_divisor(const DivisorClassX& D);

} // namespace ellfm
