#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "runcorr/autocorr.hpp"
#include "runcorr/runvector.hpp"
#include "runcorr/sequence.hpp"

namespace runcorr::cli {

// Everything the analyze command reports for one sequence, plus the
// outcome of the internal cross-checks between the independent
// computation paths.
struct AnalysisReport {
    BinarySequence sequence;
    RunLengthEncoding rle;
    AutocorrVector aperiodic;
    RunVector run_vec;
    AutocorrVector periodic;
    RunVector periodic_run;  // gamma 0 and all zeros for constant input
    std::int64_t periodic_rotation = 0;
    bool periodic_constant = false;
    MeritFactor merit;
    std::optional<std::int64_t> psl;
    bool barker = false;
    bool skew = false;
    std::vector<std::pair<std::string, bool>> checks;

    bool all_checks_pass() const;
};

AnalysisReport analyze_sequence(const BinarySequence& a);

void write_text(std::ostream& os, const AnalysisReport& rep);
void write_records(std::ostream& os, const AnalysisReport& rep);

std::string join_values(const std::vector<std::int64_t>& v);
std::string merit_decimal(const MeritFactor& m);

enum class InputFormat { auto_detect, signs, bits, rle };

// Parses sequence text in the requested format; auto detection treats
// anything with ':' or ',' as a run length list, then tries sign chars,
// then bit chars.
BinarySequence parse_input(const std::string& text, InputFormat format);

}  // namespace runcorr::cli
