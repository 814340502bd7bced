#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "runcorr/autocorr.hpp"
#include "runcorr/runvector.hpp"
#include "runcorr/sequence.hpp"

namespace runcorr {

// Odd-length test a_{m-i} = (-1)^i a_{m+i} around the middle element a_m.
// Even lengths are never skew-symmetric; length 1 trivially is.
bool is_skew_symmetric(const BinarySequence& a);

// True iff the front cuts and back cuts of the run list partition 1..n-1.
// Forces n = 2*gamma - 1. Equivalent to skew symmetry of the sequence.
bool is_balanced(const RunLengthEncoding& r);

// Trim rule: drop a lone unit run from exactly one end. Applies when one
// end run is 1 and the other is larger; the result has one run less and
// total length n-2. Empty result when the rule does not apply.
std::optional<RunLengthEncoding> reduce(const RunLengthEncoding& r);

struct SkewClassification {
    bool is_skew = false;
    bool is_balanced = false;
    bool is_reducible = false;
    std::optional<RunLengthEncoding> reduction;
};

SkewClassification classify(const RunLengthEncoding& r);

// All run length encodings of skew-symmetric sequences with the given run
// count, generated level by level from the single-run root by the two
// inverse trim moves (prepend a unit run and grow the last run; grow the
// first run and append a unit run). Deterministic order: parents in their
// enumeration order, prepend move first. Count is 2^(gamma-1).
std::vector<RunLengthEncoding> enumerate_skew_symmetric(std::int64_t gamma_target);

// Structural facts of a skew-symmetric sequence, checked against its
// autocorrelation and run vector.
struct SkewFactsReport {
    std::int64_t n = 0;
    std::int64_t gamma = 0;
    bool odd_lags_zero = false;          // C_k = 0 for every odd k
    bool gamma_is_half = false;          // gamma = (n+1)/2
    bool even_lag_run_match = false;     // R_k = C_k for even k >= 2
    bool odd_lag_run_match = false;      // R_k = -(C_{k-1}+C_{k+1})/2 for odd k
    bool barker = false;
    bool barker_run_pattern = false;     // R_1 = -gamma or 1-gamma; R_k alternates +/-1
    AutocorrVector autocorr;
    RunVector run_values;

    bool all_hold() const {
        return odd_lags_zero && gamma_is_half && even_lag_run_match && odd_lag_run_match &&
               (!barker || barker_run_pattern);
    }
};

// Errors on sequences that are not skew-symmetric.
SkewFactsReport skew_autocorr_facts(const BinarySequence& a);

}  // namespace runcorr
