#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace runcorr::cli {

struct BenchOptions {
    std::vector<std::int64_t> sizes{256, 1024, 4096};
    int trials = 3;
    std::uint64_t seed = 12345;
    std::string mode = "all";  // direct | runvector | prefix | all
    bool alternate = true;     // switch to the flipped sequence when it has fewer runs
};

// Prints one row per size with instrumented operation counts and timings.
// The exact addition count of the two-pass run vector algorithm is
// asserted on every trial; returns a nonzero exit code on a mismatch.
int run_bench(const BenchOptions& opt, std::ostream& os);

}  // namespace runcorr::cli
