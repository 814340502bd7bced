#include "runcorr/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

namespace runcorr {

namespace {

constexpr std::int64_t kPlainLimit = 24;
constexpr std::int64_t kSkewLimit = 33;
constexpr std::int64_t kNoValue = std::numeric_limits<std::int64_t>::max();

void validate_spec(const SearchSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("search needs n >= 2");
    if (spec.restrict_skew && spec.n % 2 == 0)
        throw std::invalid_argument("skew restriction needs an odd length");
    const std::int64_t limit = spec.restrict_skew ? kSkewLimit : kPlainLimit;
    if (spec.n > limit && !spec.override_size_limit)
        throw std::invalid_argument("n = " + std::to_string(spec.n) +
                                    " exceeds the search size limit " + std::to_string(limit) +
                                    "; set the override to proceed");
    if (spec.bound && *spec.bound < 0)
        throw std::invalid_argument("sidelobe bound must be non-negative");
    const std::int64_t max_depth = (spec.n + 1) / 2;
    if (spec.prune_depth < 0 || spec.prune_depth > max_depth)
        throw std::invalid_argument("prune depth must be between 1 and " +
                                    std::to_string(max_depth) + " (or 0 for the default)");
    if (spec.threads < 1) throw std::invalid_argument("thread count must be at least 1");
}

std::string canonical_text(const BinarySequence& a, bool quotient_reversal) {
    std::string s = a.to_string();
    if (quotient_reversal) {
        std::string r(s.rbegin(), s.rend());
        if (r[0] == '-')
            for (char& c : r) c = (c == '-') ? '+' : '-';
        if (r < s) return r;
    }
    return s;
}

// One integer scores a candidate: the sidelobe peak, or the squared
// sidelobe energy (a larger merit factor is exactly a smaller energy).
std::int64_t score(const BinarySequence& a, Objective objective) {
    const AutocorrVector c = aperiodic_direct(a);
    return objective == Objective::min_psl ? peak_sidelobe_level(c) : off_peak_energy(c);
}

struct LocalResult {
    std::int64_t best = kNoValue;
    std::vector<std::string> optima;
    std::uint64_t visited = 0;
    std::uint64_t pruned = 0;
    std::vector<PruneEvent> prune_log;
};

void consider_leaf(LocalResult& local, std::atomic<std::int64_t>& shared_best,
                   const SearchSpec& spec, const BinarySequence& a) {
    ++local.visited;
    const std::int64_t value = score(a, spec.objective);
    if (spec.objective == Objective::min_psl && spec.bound && value > *spec.bound) return;
    if (value < local.best) {
        local.best = value;
        local.optima.clear();
    }
    if (value == local.best) local.optima.push_back(canonical_text(a, spec.quotient_reversal));
    std::int64_t seen = shared_best.load(std::memory_order_relaxed);
    while (value < seen &&
           !shared_best.compare_exchange_weak(seen, value, std::memory_order_relaxed)) {
    }
}

// Full skew-symmetric sequence from its free first half a_1..a_m.
BinarySequence expand_skew(const std::vector<std::int8_t>& half, std::int64_t n) {
    const std::int64_t m = (n + 1) / 2;
    std::vector<std::int8_t> elems(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < m; ++i)
        elems[static_cast<std::size_t>(i)] = half[static_cast<std::size_t>(i)];
    for (std::int64_t j = 1; j <= m - 1; ++j) {
        const std::int8_t v = half[static_cast<std::size_t>(m - j - 1)];
        elems[static_cast<std::size_t>(m + j - 1)] =
            (j % 2 != 0) ? static_cast<std::int8_t>(-v) : v;
    }
    return BinarySequence(std::move(elems));
}

// ---------------------------------------------------------------------------
// Outside-in branch and bound.
//
// A border of width d (first d and last d placed elements) fully determines
// the autocorrelations at lags n-1 down to n-d: the border cut tables give
// the high-lag run values, the outermost signs give the parity of the total
// run count, and the second-difference recurrence seeded with C_n = 0,
// C_{n-1} = +/-1 turns both into autocorrelation values. A branch dies as
// soon as one determined value breaks the cap (or, for the merit objective,
// as soon as the determined energy plus parity floors exceeds the best).
//
// In skew mode only the first half is free; every prefix element placed
// also fixes its mirror, so the border grows with every placement.
// ---------------------------------------------------------------------------
class PrunedDfs {
public:
    PrunedDfs(const SearchSpec& spec, std::atomic<std::int64_t>& shared_best)
        : spec_(spec),
          n_(spec.n),
          middle_((spec.n + 1) / 2),
          depth_limit_(spec.prune_depth == 0 ? (spec.n + 1) / 2 : spec.prune_depth),
          merit_(spec.objective == Objective::max_merit_factor),
          cap_bound_(spec.bound ? *spec.bound : kNoValue),
          shared_best_(shared_best) {
        front_dense_.assign(static_cast<std::size_t>(n_), 0);
        back_dense_.assign(static_cast<std::size_t>(n_), 0);
        prefix_.reserve(static_cast<std::size_t>(n_));
        suffix_rev_.reserve(static_cast<std::size_t>(n_));
        high_c_.push_back(0);  // C_n
        // Parity floor table: |C_k| >= 1 whenever n-k is odd, so the count
        // of odd values in (avail, n-1] lower-bounds the energy of the lags
        // the border has not determined yet.
        odd_above_.assign(static_cast<std::size_t>(n_) + 1, 0);
        for (std::int64_t j = n_ - 1; j >= 0; --j)
            odd_above_[static_cast<std::size_t>(j)] =
                odd_above_[static_cast<std::size_t>(j + 1)] +
                ((j + 1 <= n_ - 1 && (j + 1) % 2 != 0) ? 1 : 0);
    }

    LocalResult& result() { return local_; }

    std::int64_t total_placements() const { return spec_.restrict_skew ? middle_ : n_; }

    // Searches below a fixed assignment of the first branching placements
    // (the forced a_1 = + not included).
    void run_task(const std::vector<std::int8_t>& fixed) {
        std::size_t applied = 0;
        bool alive = try_place(1);  // a_1
        ++applied;
        if (alive) {
            for (std::size_t i = 0; i < fixed.size(); ++i) {
                alive = try_place(fixed[i]);
                ++applied;
                if (!alive) break;
            }
        }
        if (alive) dfs();
        for (std::size_t i = 0; i < applied; ++i) unplace();
    }

private:
    struct Frame {
        bool to_suffix = false;       // general mode: element went to the suffix
        bool has_partner = false;     // skew mode: a mirror element was placed too
        bool front_cut = false;
        bool back_cut = false;
        int tail_added = 0;
        int high_added = 0;
        std::int64_t energy_added = 0;
    };

    void dfs() {
        if (placements_ == total_placements()) {
            evaluate_leaf();
            return;
        }
        for (int sign : {+1, -1}) {
            if (try_place(static_cast<std::int8_t>(sign))) dfs();
            unplace();
        }
    }

    void evaluate_leaf() {
        if (spec_.restrict_skew) {
            consider_leaf(local_, shared_best_, spec_, expand_skew(prefix_, n_));
            return;
        }
        std::vector<std::int8_t> elems = prefix_;
        elems.insert(elems.end(), suffix_rev_.rbegin(), suffix_rev_.rend());
        consider_leaf(local_, shared_best_, spec_, BinarySequence(std::move(elems)));
    }

    // Places the next element, extends whatever the widened border now
    // determines, and checks the cap. Returns false when the branch is
    // dead; the caller must call unplace() exactly once either way.
    bool try_place(std::int8_t sign) {
        Frame f;
        if (spec_.restrict_skew) {
            push_prefix(sign, f);
            const std::int64_t i = static_cast<std::int64_t>(prefix_.size());
            if (i < middle_) {
                const std::int64_t j = middle_ - i;  // mirror position offset
                const std::int8_t partner =
                    (j % 2 != 0) ? static_cast<std::int8_t>(-sign) : sign;
                f.has_partner = true;
                push_suffix(partner, f);
            }
        } else {
            f.to_suffix = !prefix_.empty() && suffix_rev_.size() < prefix_.size();
            if (f.to_suffix) push_suffix(sign, f);
            else push_prefix(sign, f);
        }
        ++placements_;

        const bool ok = extend_determined(f);
        frames_.push_back(f);
        if (!ok) {
            ++local_.pruned;
            if (spec_.collect_prune_log) record_prune();
            return false;
        }
        return true;
    }

    void unplace() {
        const Frame f = frames_.back();
        frames_.pop_back();
        --placements_;
        for (int i = 0; i < f.tail_added; ++i) tail_r_.pop_back();
        for (int i = 0; i < f.high_added; ++i) high_c_.pop_back();
        det_energy_ -= f.energy_added;
        if (f.has_partner) pop_suffix(f.back_cut);
        if (f.to_suffix) pop_suffix(f.back_cut);
        else pop_prefix(f.front_cut);
    }

    void push_prefix(std::int8_t sign, Frame& f) {
        if (!prefix_.empty() && sign != prefix_.back()) {
            const std::int64_t cut = static_cast<std::int64_t>(prefix_.size());
            front_cuts_.push_back(cut);
            front_dense_[static_cast<std::size_t>(cut)] =
                (front_cuts_.size() % 2 != 0) ? -1 : 1;
            f.front_cut = true;
        }
        prefix_.push_back(sign);
    }

    void pop_prefix(bool had_cut) {
        prefix_.pop_back();
        if (had_cut) {
            front_dense_[static_cast<std::size_t>(front_cuts_.back())] = 0;
            front_cuts_.pop_back();
        }
    }

    void push_suffix(std::int8_t sign, Frame& f) {
        if (!suffix_rev_.empty() && sign != suffix_rev_.back()) {
            const std::int64_t cut = static_cast<std::int64_t>(suffix_rev_.size());
            back_cuts_.push_back(cut);
            back_dense_[static_cast<std::size_t>(cut)] = (back_cuts_.size() % 2 != 0) ? -1 : 1;
            f.back_cut = true;
        }
        suffix_rev_.push_back(sign);
    }

    void pop_suffix(bool had_cut) {
        suffix_rev_.pop_back();
        if (had_cut) {
            back_dense_[static_cast<std::size_t>(back_cuts_.back())] = 0;
            back_cuts_.pop_back();
        }
    }

    int front_sign(std::int64_t x) const {
        if (x < 1 || x >= static_cast<std::int64_t>(prefix_.size())) return 0;
        return front_dense_[static_cast<std::size_t>(x)];
    }

    int back_sign(std::int64_t x) const {
        if (x < 1 || x >= static_cast<std::int64_t>(suffix_rev_.size())) return 0;
        return back_dense_[static_cast<std::size_t>(x)];
    }

    // R_{n-k} from the border cut tables and the run-count parity.
    std::int64_t tail_value(std::int64_t k) const {
        std::int64_t v = front_sign(k) + back_sign(k);
        std::int64_t inner = 0;
        for (std::size_t idx = 0; idx < front_cuts_.size(); ++idx) {
            const std::int64_t sj = front_cuts_[idx];
            if (sj >= k) break;
            const int f = back_sign(k - sj);
            inner += ((idx + 1) % 2 != 0) ? -f : f;
        }
        v += 2 * inner;
        const bool gamma_even = prefix_.front() != suffix_rev_.front();
        return gamma_even ? v : -v;
    }

    std::int64_t current_cap() const {
        const std::int64_t best = shared_best_.load(std::memory_order_relaxed);
        if (merit_) return best;
        return std::min(cap_bound_, best);
    }

    // Appends the newly determined tail run values and high-lag
    // autocorrelations; false when the cap is already violated.
    bool extend_determined(Frame& f) {
        const std::int64_t d = std::min(static_cast<std::int64_t>(prefix_.size()),
                                        static_cast<std::int64_t>(suffix_rev_.size()));
        if (d < 1) return true;
        const std::int64_t cap = current_cap();
        const bool gamma_even = prefix_.front() != suffix_rev_.front();

        while (static_cast<std::int64_t>(tail_r_.size()) < std::min(d - 1, depth_limit_ - 1)) {
            const std::int64_t k = static_cast<std::int64_t>(tail_r_.size()) + 1;
            tail_r_.push_back(tail_value(k));
            ++f.tail_added;
        }
        bool ok = true;
        while (static_cast<std::int64_t>(high_c_.size()) <= std::min(d, depth_limit_)) {
            const std::int64_t k = static_cast<std::int64_t>(high_c_.size());
            std::int64_t v;
            if (k == 1) {
                v = gamma_even ? -1 : 1;
            } else {
                v = 2 * high_c_[static_cast<std::size_t>(k - 1)] -
                    high_c_[static_cast<std::size_t>(k - 2)] -
                    2 * tail_r_[static_cast<std::size_t>(k - 2)];
            }
            high_c_.push_back(v);
            ++f.high_added;
            if (merit_) {
                const std::int64_t sq = v * v;
                det_energy_ += sq;
                f.energy_added += sq;
            } else if (v > cap || v < -cap) {
                ok = false;
                break;
            }
        }
        if (merit_ && ok && cap != kNoValue) {
            const std::int64_t avail = static_cast<std::int64_t>(high_c_.size()) - 1;
            if (det_energy_ + odd_above_[static_cast<std::size_t>(avail)] > cap) ok = false;
        }
        return ok;
    }

    void record_prune() {
        PruneEvent e;
        e.prefix.assign(prefix_.size(), '+');
        for (std::size_t i = 0; i < prefix_.size(); ++i)
            if (prefix_[i] < 0) e.prefix[i] = '-';
        e.suffix.assign(suffix_rev_.size(), '+');
        for (std::size_t i = 0; i < suffix_rev_.size(); ++i)
            if (suffix_rev_[i] < 0) e.suffix[i] = '-';
        e.cap = current_cap();
        e.merit_energy = merit_;
        local_.prune_log.push_back(e);
    }

    const SearchSpec& spec_;
    std::int64_t n_;
    std::int64_t middle_;
    std::int64_t depth_limit_;
    bool merit_;
    std::int64_t cap_bound_;
    std::atomic<std::int64_t>& shared_best_;

    std::vector<std::int8_t> prefix_;
    std::vector<std::int8_t> suffix_rev_;
    std::vector<std::int64_t> front_cuts_;
    std::vector<std::int64_t> back_cuts_;
    std::vector<std::int8_t> front_dense_;
    std::vector<std::int8_t> back_dense_;
    std::vector<std::int64_t> tail_r_;   // R_{n-k} at [k-1]
    std::vector<std::int64_t> high_c_;   // C_{n-k} at [k]; [0] = C_n = 0
    std::vector<std::int64_t> odd_above_;
    std::int64_t det_energy_ = 0;
    std::int64_t placements_ = 0;
    std::vector<Frame> frames_;
    LocalResult local_;
};

SearchResult finalize(const SearchSpec& spec, std::vector<LocalResult> parts) {
    SearchResult out;
    out.objective = spec.objective;
    std::int64_t best = kNoValue;
    for (const LocalResult& part : parts) {
        out.nodes_visited += part.visited;
        out.nodes_pruned += part.pruned;
        if (part.best < best) best = part.best;
    }
    std::vector<std::string> texts;
    for (LocalResult& part : parts) {
        if (part.best == best && best != kNoValue)
            texts.insert(texts.end(), part.optima.begin(), part.optima.end());
        out.prune_log.insert(out.prune_log.end(), part.prune_log.begin(), part.prune_log.end());
    }
    std::sort(texts.begin(), texts.end());
    texts.erase(std::unique(texts.begin(), texts.end()), texts.end());
    for (const std::string& t : texts)
        out.optima.push_back(BinarySequence::parse(t, TextFormat::sign_chars));
    if (best != kNoValue) {
        if (spec.objective == Objective::min_psl) {
            out.best_psl = best;
        } else {
            out.best_energy = best;
            out.best_merit = MeritFactor{spec.n * spec.n, 2 * best};
        }
    }
    return out;
}

}  // namespace

SearchResult exhaustive_search(const SearchSpec& spec) {
    validate_spec(spec);
    const std::int64_t n = spec.n;
    const std::int64_t free_bits = spec.restrict_skew ? (n + 1) / 2 - 1 : n - 1;
    const std::uint64_t count = std::uint64_t{1} << free_bits;

    const int workers = std::max(1, std::min<int>(spec.threads, 64));
    const std::uint64_t chunks =
        workers == 1 ? 1 : std::min<std::uint64_t>(count, 4ull * static_cast<unsigned>(workers));
    std::vector<LocalResult> parts(chunks);
    std::atomic<std::int64_t> shared_best{kNoValue};
    std::atomic<std::uint64_t> next_chunk{0};

    auto run_chunk = [&](std::uint64_t chunk) {
        const std::uint64_t base = count / chunks;
        const std::uint64_t rem = count % chunks;
        const std::uint64_t lo = base * chunk + std::min<std::uint64_t>(chunk, rem);
        const std::uint64_t hi = lo + base + (chunk < rem ? 1 : 0);
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            if (spec.restrict_skew) {
                const std::int64_t m = (n + 1) / 2;
                std::vector<std::int8_t> half(static_cast<std::size_t>(m));
                half[0] = 1;
                for (std::int64_t b = 0; b < m - 1; ++b)
                    half[static_cast<std::size_t>(b + 1)] = (mask >> b) & 1 ? -1 : 1;
                consider_leaf(parts[chunk], shared_best, spec, expand_skew(half, n));
            } else {
                std::vector<std::int8_t> elems(static_cast<std::size_t>(n), 1);
                for (std::int64_t b = 0; b < n - 1; ++b)
                    elems[static_cast<std::size_t>(b + 1)] = (mask >> b) & 1 ? -1 : 1;
                consider_leaf(parts[chunk], shared_best, spec, BinarySequence(std::move(elems)));
            }
        }
    };

    if (workers == 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::uint64_t c = next_chunk.fetch_add(1); c < chunks;
                     c = next_chunk.fetch_add(1))
                    run_chunk(c);
            });
        for (std::thread& t : pool) t.join();
    }
    return finalize(spec, std::move(parts));
}

SearchResult pruned_search(const SearchSpec& spec) {
    validate_spec(spec);
    std::atomic<std::int64_t> shared_best{kNoValue};

    // Tasks fix the first branching placements; each worker replays its
    // assignment (with pruning) and searches the subtree below it. Task
    // results merge in task order, so the outcome does not depend on
    // scheduling.
    const std::int64_t branch_placements =
        (spec.restrict_skew ? (spec.n + 1) / 2 : spec.n) - 1;
    int task_bits = 0;
    if (spec.threads > 1) {
        while ((std::int64_t{1} << task_bits) < 4ll * spec.threads &&
               task_bits < branch_placements && task_bits < 12)
            ++task_bits;
    }
    const std::uint64_t tasks = std::uint64_t{1} << task_bits;
    std::vector<LocalResult> parts(tasks);
    std::atomic<std::uint64_t> next_task{0};

    auto run_task = [&](std::uint64_t task) {
        PrunedDfs dfs(spec, shared_best);
        std::vector<std::int8_t> fixed(static_cast<std::size_t>(task_bits));
        for (int b = 0; b < task_bits; ++b)
            fixed[static_cast<std::size_t>(b)] = (task >> b) & 1 ? -1 : 1;
        dfs.run_task(fixed);
        parts[task] = std::move(dfs.result());
    };

    const int workers = std::max(1, std::min<int>(spec.threads, 64));
    if (workers == 1) {
        for (std::uint64_t t = 0; t < tasks; ++t) run_task(t);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::uint64_t t = next_task.fetch_add(1); t < tasks;
                     t = next_task.fetch_add(1))
                    run_task(t);
            });
        for (std::thread& t : pool) t.join();
    }
    return finalize(spec, std::move(parts));
}

PartialEvaluation evaluate_partial(const PartialRunInfo& p, std::int64_t bound) {
    if (bound < 0) throw std::invalid_argument("bound must be non-negative");
    const PartialTables tables = partial_tables(p);
    std::vector<GammaParity> parities;
    if (p.gamma_parity) parities.push_back(*p.gamma_parity);
    else parities = {GammaParity::even, GammaParity::odd};

    PartialEvaluation out;
    for (GammaParity parity : parities) {
        PartialEvaluation::ParityCase c{parity, tail_run_values(tables, parity), {}, true};
        const std::int64_t m = tables.border;
        c.high_autocorr.reserve(static_cast<std::size_t>(m));
        std::int64_t prev2 = 0;                                     // C_n
        std::int64_t prev1 = parity == GammaParity::even ? -1 : 1;  // C_{n-1}
        c.high_autocorr.push_back(prev1);
        for (std::int64_t k = 2; k <= m; ++k) {
            const std::int64_t v =
                2 * prev1 - prev2 - 2 * c.tail_run[static_cast<std::size_t>(k - 2)];
            c.high_autocorr.push_back(v);
            prev2 = prev1;
            prev1 = v;
        }
        for (std::int64_t k = 1; k <= m - 1; ++k) {
            const std::int64_t v = c.high_autocorr[static_cast<std::size_t>(k - 1)];
            if (v > bound || v < -bound) {
                c.within_bound = false;
                break;
            }
        }
        if (c.within_bound) out.feasible = true;
        out.cases.push_back(std::move(c));
    }
    return out;
}

}  // namespace runcorr
