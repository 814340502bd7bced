#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "runcorr/autocorr.hpp"
#include "runcorr/sequence.hpp"

namespace runcorr {

// Thrown when a reconstructed vector fails its built-in end checks
// (aperiodic C_n = 0, periodic C_n = n), i.e. the supplied run data was
// not a valid run vector for the claimed n and gamma.
class ReconstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Run-structure contributions R_1..R_{n-1}: R_k collects the signed weights
// of all groups of consecutive runs whose total length is k. Twice the
// negated second difference of the autocorrelation vector in the aperiodic
// case, four times in the periodic case.
class RunVector {
public:
    RunVector(CorrelationKind kind, std::int64_t n, std::int64_t gamma,
              std::vector<std::int64_t> values);

    CorrelationKind kind() const { return kind_; }
    std::int64_t n() const { return n_; }
    std::int64_t gamma() const { return gamma_; }

    // Access by lag, 1 <= k <= n-1.
    std::int64_t at(std::int64_t k) const;

    const std::vector<std::int64_t>& values() const { return values_; }

    friend bool operator==(const RunVector&, const RunVector&) = default;

private:
    CorrelationKind kind_;
    std::int64_t n_;
    std::int64_t gamma_;
    std::vector<std::int64_t> values_;
};

// (v_3 - 2 v_2 + v_1, v_4 - 2 v_3 + v_2, ...); needs at least 3 entries.
std::vector<std::int64_t> second_difference(std::span<const std::int64_t> v);

// Fast two-pass computation of the run vector. The first pass walks the
// outer substring family (prefixes and suffixes of the run list), the
// second the inner ones. When `additions` is given it receives the exact
// number of additions performed, which is (gamma-1)(gamma+2); there are no
// multiplications on this path.
RunVector run_vector(const RunLengthEncoding& r, std::int64_t* additions = nullptr);

// Definition-level oracle: enumerate every substring of the run list,
// classify it inner/outer and accumulate the signed weights.
RunVector run_vector_bruteforce(const RunLengthEncoding& r);

// Cut positions of the run list measured from the front (s_j) and from the
// back (t_j), plus their signed indicator functions. front_cut(j) +
// back_cut(gamma - j) = n for every j.
struct PrefixSumTables {
    std::int64_t n = 0;
    std::int64_t gamma = 0;
    std::vector<std::int64_t> front_cuts;  // s_1 < s_2 < ... < s_{gamma-1}
    std::vector<std::int64_t> back_cuts;   // t_1 < t_2 < ... < t_{gamma-1}

    // (-1)^j when x equals the j-th cut, 0 otherwise (also 0 outside 1..n-1).
    int front_sign(std::int64_t x) const;
    int back_sign(std::int64_t x) const;

    std::vector<std::int8_t> front_dense;  // index k in 1..n-1
    std::vector<std::int8_t> back_dense;
};

PrefixSumTables prefix_sum_tables(const RunLengthEncoding& r);

// Run vector evaluated lag by lag from the cut indicator functions:
// R_k = f(k) + (-1)^gamma f(n-k) + 2 sum_j (-1)^j f(s_j - k) with f the
// front-cut sign. Exactly equal to run_vector().
RunVector run_vector_prefix_formula(const RunLengthEncoding& r);

// Rebuild the autocorrelation vector from (n, gamma, R): C_0 = n,
// C_1 = n+1-2*gamma, then C_{k+1} = 2 C_k - C_{k-1} - 2 R_k. Verifies
// C_n = 0 and |C_{n-1}| = 1 and throws ReconstructionError otherwise.
AutocorrVector autocorr_from_runvector(const RunVector& rv);

// Same vector computed from the other end, seeded with C_n = 0 and
// C_{n-1} = +1/-1 according to the parity of gamma.
AutocorrVector autocorr_from_runvector_backward(const RunVector& rv);

// Convenience path: RLE -> run vector -> autocorrelation vector. When
// allowed and the run count exceeds (n+1)/2, the computation switches to
// the sequence with every second element flipped (which has n+1-gamma
// runs) and restores the odd-lag signs afterwards.
AutocorrVector autocorr_fast(const BinarySequence& a, bool allow_alternation = true);

// Periodic run vector via the half-sum identity 2 R~_k = R_k + R_{n-k}.
// Requires an even number of runs (rotate first so the ends differ); the
// division by two is checked to be exact.
RunVector periodic_run_vector(const RunLengthEncoding& r);

// Oracle: enumerate the cyclic substrings of the run list (all pairs of
// distinct cut points) and accumulate +/-1 per substring by parity of its
// run count.
RunVector periodic_run_vector_bruteforce(const RunLengthEncoding& r);

// C_0 = n, C_1 = n-2*gamma, C_{k+1} = 2 C_k - C_{k-1} - 4 R~_k. Verifies
// C_n = n. A constant sequence is represented by gamma = 0 and an all-zero
// run vector, which yields the constant vector C_k = n.
AutocorrVector periodic_autocorr_from_runvector(const RunVector& rv);
AutocorrVector periodic_autocorr_from_runvector_backward(const RunVector& rv);

struct CanonicalRotation {
    BinarySequence sequence;
    std::int64_t shift;
};

// Smallest left rotation making the first and last elements differ, so the
// run count of the result is even. Errors on constant input.
CanonicalRotation canonicalize_periodic(const BinarySequence& a);

enum class GammaParity { even, odd };

// Border view of a partially known sequence: the complete runs seen within
// the first `border` elements and within the last `border` elements, plus
// the observed length of each unfinished run. The parity of the total run
// count is extra knowledge the run lengths alone cannot supply.
struct PartialRunInfo {
    std::vector<std::int64_t> prefix_runs;  // complete runs from the front
    std::int64_t prefix_open = 0;           // observed length of the unfinished front run
    std::vector<std::int64_t> suffix_runs;  // complete runs from the back; [0] is the last run
    std::int64_t suffix_open = 0;
    std::int64_t border = 0;                // m: how many elements are known on each side
    std::optional<GammaParity> gamma_parity;

    void validate() const;

    // Build the border view from the known sign prefix/suffix. The parity
    // is derived from the outermost signs (ends differ => even run count).
    static PartialRunInfo from_border(std::span<const std::int8_t> prefix,
                                      std::span<const std::int8_t> suffix);
};

// Cut tables derivable from a border: every front cut s_j < border and
// every back cut t_j < border, with the same signed indicators as
// PrefixSumTables but only valid for arguments below the border.
struct PartialTables {
    std::int64_t border = 0;
    std::vector<std::int64_t> front_cuts;
    std::vector<std::int64_t> back_cuts;
    std::vector<std::int8_t> front_dense;  // index 1..border-1
    std::vector<std::int8_t> back_dense;

    int front_sign(std::int64_t x) const;
    int back_sign(std::int64_t x) const;
};

PartialTables partial_tables(const PartialRunInfo& p);

// High-lag run values from border knowledge alone: element [k-1] holds
// R_{n-k}, for k = 1..border-1. Requires gamma_parity to be set.
std::vector<std::int64_t> tail_run_values(const PartialRunInfo& p);
std::vector<std::int64_t> tail_run_values(const PartialTables& t, GammaParity parity);

}  // namespace runcorr
