#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace runcorr::cli {

struct SelfTestOptions {
    std::int64_t max_n = 12;       // exhaustive identity checks up to this length
    std::int64_t samples = 200;    // random sequences beyond the exhaustive range
    std::uint64_t seed = 12345;
    bool inject_bug = false;       // deliberately corrupt one identity to exercise failure reporting
};

struct SelfTestOutcome {
    bool passed = true;
    std::vector<std::string> lines;       // one summary line per suite
    std::string counterexample;           // first failing case, empty when passed
    std::uint64_t checks = 0;
};

SelfTestOutcome run_selftest(const SelfTestOptions& opt);

void write_selftest(std::ostream& os, const SelfTestOutcome& outcome);

}  // namespace runcorr::cli
