#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "runcorr/autocorr.hpp"
#include "runcorr/runvector.hpp"
#include "runcorr/sequence.hpp"

namespace runcorr {

enum class Objective { min_psl, max_merit_factor };

// Desk-scale search setup. The first element is always fixed to +1 to
// quotient out global negation; reversal can be quotiented on top. The
// exhaustive space is 2^(n-1) sequences, or 2^((n-1)/2) when restricted to
// skew-symmetric candidates, so the default size limits keep runs sane.
struct SearchSpec {
    std::int64_t n = 0;
    Objective objective = Objective::min_psl;
    bool restrict_skew = false;
    std::int64_t prune_depth = 0;        // 0 means the maximum, ceil(n/2)
    std::optional<std::int64_t> bound;   // hard sidelobe cap (min_psl only)
    bool quotient_reversal = false;
    int threads = 1;
    bool override_size_limit = false;
    bool collect_prune_log = false;
};

// One abandoned branch: the border at the moment of pruning and the cap it
// failed against. Kept only when collect_prune_log is set; lets tests
// replay every cut branch against the oracle.
struct PruneEvent {
    std::string prefix;       // sign chars, outermost first
    std::string suffix;       // sign chars, outermost (last element) first
    std::int64_t cap;         // the bound in force when the branch was cut
    bool merit_energy = false;  // true when cut by the energy bound instead
};

struct SearchResult {
    Objective objective = Objective::min_psl;
    std::optional<std::int64_t> best_psl;
    std::optional<std::int64_t> best_energy;  // sum of squared sidelobes
    MeritFactor best_merit;                   // defined iff best_energy is set
    std::vector<BinarySequence> optima;       // canonical, lexicographically sorted
    std::uint64_t nodes_visited = 0;          // complete sequences scored
    std::uint64_t nodes_pruned = 0;           // branches abandoned early
    std::vector<PruneEvent> prune_log;
};

// Scores every candidate with the direct-sum oracle. Errors when n exceeds
// the size limit (24 plain, 33 skew-restricted) without override.
SearchResult exhaustive_search(const SearchSpec& spec);

// Same optimum, computed by growing prefix and suffix outside-in and
// abandoning a branch as soon as some border-determined high-lag
// autocorrelation already violates the cap (or, for the merit objective,
// the determined energy plus parity floors already exceeds the best).
SearchResult pruned_search(const SearchSpec& spec);

// What a border alone pins down. high_autocorr[k-1] holds C_{n-k} for
// k = 1..border; the feasibility verdict uses k <= border-1 only, so a
// full-width border (m = n) is not judged against its own peak.
struct PartialEvaluation {
    struct ParityCase {
        GammaParity parity;
        std::vector<std::int64_t> tail_run;      // R_{n-k}, k = 1..border-1
        std::vector<std::int64_t> high_autocorr; // C_{n-k}, k = 1..border
        bool within_bound = true;
    };
    bool feasible = false;  // some parity choice stays within the bound
    std::vector<ParityCase> cases;
};

// Evaluates both parities when the PartialRunInfo leaves gamma_parity
// unset, otherwise just the given one.
PartialEvaluation evaluate_partial(const PartialRunInfo& p, std::int64_t bound);

}  // namespace runcorr
