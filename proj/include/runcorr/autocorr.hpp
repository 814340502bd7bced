#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "runcorr/sequence.hpp"

namespace runcorr {

enum class CorrelationKind { aperiodic, periodic };

// Autocorrelation values C_0..C_n stored as one vector of length n+1.
// Aperiodic vectors end with the convention C_n = 0, periodic ones with
// C_n = n; the constructor rejects anything that violates the basic shape.
class AutocorrVector {
public:
    AutocorrVector(CorrelationKind kind, std::vector<std::int64_t> values);

    CorrelationKind kind() const { return kind_; }
    std::int64_t n() const { return static_cast<std::int64_t>(values_.size()) - 1; }

    // Lag access, 0 <= k <= n.
    std::int64_t at(std::int64_t k) const;

    const std::vector<std::int64_t>& values() const { return values_; }

    friend bool operator==(const AutocorrVector&, const AutocorrVector&) = default;

private:
    CorrelationKind kind_;
    std::vector<std::int64_t> values_;
};

// Direct evaluation of the defining sums; O(n^2). These are the reference
// oracles every fast path is tested against.
AutocorrVector aperiodic_direct(const BinarySequence& a);
AutocorrVector periodic_direct(const BinarySequence& a);

// n^2 over twice the off-peak energy, kept as an exact integer ratio;
// the decimal rendering is presentation only.
struct MeritFactor {
    std::int64_t numerator = 0;    // n^2
    std::int64_t denominator = 0;  // 2 * sum of C_k^2 over k = 1..n-1

    bool defined() const { return denominator != 0; }
    double value() const;
    std::string to_string() const;  // e.g. "169/196"; "undefined" when denominator is 0
};

// Requires an aperiodic vector; n = 1 (or an all-zero off-peak vector)
// yields an undefined result rather than a division by zero.
MeritFactor merit_factor(const AutocorrVector& c);

// Sum of C_k^2 over k = 1..n-1.
std::int64_t off_peak_energy(const AutocorrVector& c);

// max |C_k| over 1 <= k <= n-1; requires an aperiodic vector with n >= 2.
std::int64_t peak_sidelobe_level(const AutocorrVector& c);

// True iff every off-peak aperiodic value has magnitude at most 1.
bool is_barker(const BinarySequence& a);

}  // namespace runcorr
