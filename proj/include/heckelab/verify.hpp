#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace heckelab {

struct RunConfig {
    double alpha = 1.0;
    uint64_t n_max = 100'000;
    double ratio = 1.25;
    uint64_t seed = 20240601;
    std::string out_dir;      // empty = current directory
    std::string cache_path;   // optional tau cache to validate and reuse
};

// Runs the invariant suites of every module at the configured scale and
// writes one line per check: name, lhs, rhs, bound, pass/fail. Returns 0
// iff every executed check passed. Checks whose preconditions the scale
// cannot meet are reported as skipped, not failed.
int run_verify(const RunConfig& config, std::ostream& report);

}  // namespace heckelab
