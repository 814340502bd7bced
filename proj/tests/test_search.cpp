#include <doctest.h>

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "runcorr/autocorr.hpp"
#include "runcorr/search.hpp"
#include "runcorr/sequence.hpp"
#include "runcorr/skew.hpp"

using namespace runcorr;

namespace {

const char* kBarker13 = "+++++--++-+-+";

std::set<std::string> optimum_texts(const SearchResult& r) {
    std::set<std::string> out;
    for (const BinarySequence& a : r.optima) out.insert(a.to_string());
    return out;
}

SearchSpec make(std::int64_t n, Objective objective) {
    SearchSpec spec;
    spec.n = n;
    spec.objective = objective;
    return spec;
}

}  // namespace

TEST_CASE("barker length 13 is the sidelobe optimum") {
    SearchSpec spec = make(13, Objective::min_psl);
    const SearchResult ex = exhaustive_search(spec);
    REQUIRE(ex.best_psl.has_value());
    CHECK(*ex.best_psl == 1);
    CHECK(optimum_texts(ex).count(kBarker13) == 1);

    const SearchResult pr = pruned_search(spec);
    REQUIRE(pr.best_psl.has_value());
    CHECK(*pr.best_psl == 1);
    CHECK(optimum_texts(pr) == optimum_texts(ex));
}

TEST_CASE("tiny lengths") {
    const SearchResult r2 = exhaustive_search(make(2, Objective::min_psl));
    REQUIRE(r2.best_psl.has_value());
    CHECK(*r2.best_psl == 1);
    CHECK(optimum_texts(r2) == std::set<std::string>{"++", "+-"});
}

TEST_CASE("bound zero yields an empty result") {
    for (std::int64_t n = 2; n <= 8; ++n) {
        SearchSpec spec = make(n, Objective::min_psl);
        spec.bound = 0;
        const SearchResult ex = exhaustive_search(spec);
        CHECK_FALSE(ex.best_psl.has_value());
        CHECK(ex.optima.empty());
        const SearchResult pr = pruned_search(spec);
        CHECK_FALSE(pr.best_psl.has_value());
        CHECK(pr.optima.empty());
    }
}

TEST_CASE("pruned equals exhaustive for both objectives") {
    for (std::int64_t n = 2; n <= 14; ++n) {
        for (Objective objective : {Objective::min_psl, Objective::max_merit_factor}) {
            const SearchSpec spec = make(n, objective);
            const SearchResult ex = exhaustive_search(spec);
            const SearchResult pr = pruned_search(spec);
            REQUIRE(ex.best_psl == pr.best_psl);
            REQUIRE(ex.best_energy == pr.best_energy);
            REQUIRE(optimum_texts(ex) == optimum_texts(pr));
        }
    }
}

TEST_CASE("pruning visits strictly fewer sequences under a tight bound") {
    SearchSpec spec = make(13, Objective::min_psl);
    spec.bound = 1;
    const SearchResult ex = exhaustive_search(spec);
    const SearchResult pr = pruned_search(spec);
    CHECK(optimum_texts(ex) == optimum_texts(pr));
    CHECK(pr.nodes_visited < ex.nodes_visited);
    CHECK(pr.nodes_pruned > 0);
}

TEST_CASE("skew-restricted search") {
    SearchSpec spec = make(13, Objective::max_merit_factor);
    spec.restrict_skew = true;
    const SearchResult ex = exhaustive_search(spec);
    REQUIRE(ex.best_energy.has_value());
    CHECK(ex.nodes_visited == 64);  // 2^((13-1)/2)

    // Subset oracle: score every skew-symmetric candidate directly.
    std::int64_t best_energy = std::numeric_limits<std::int64_t>::max();
    std::set<std::string> best_set;
    for (const RunLengthEncoding& r : enumerate_skew_symmetric(7)) {
        for (const BinarySequence& a : {from_rle(r), negate(from_rle(r))}) {
            if (a[0] != 1) continue;
            const std::int64_t e = off_peak_energy(aperiodic_direct(a));
            if (e < best_energy) {
                best_energy = e;
                best_set.clear();
            }
            if (e == best_energy) best_set.insert(a.to_string());
        }
    }
    CHECK(*ex.best_energy == best_energy);
    CHECK(optimum_texts(ex) == best_set);

    const SearchResult pr = pruned_search(spec);
    CHECK(pr.best_energy == ex.best_energy);
    CHECK(optimum_texts(pr) == optimum_texts(ex));

    // The best skew candidate can be no better than the overall best.
    SearchSpec plain = make(13, Objective::max_merit_factor);
    const SearchResult all = exhaustive_search(plain);
    CHECK(*all.best_energy <= best_energy);
}

TEST_CASE("skew equivalence across methods and objectives") {
    for (std::int64_t n : {5, 9, 13, 15}) {
        for (Objective objective : {Objective::min_psl, Objective::max_merit_factor}) {
            SearchSpec spec = make(n, objective);
            spec.restrict_skew = true;
            const SearchResult ex = exhaustive_search(spec);
            const SearchResult pr = pruned_search(spec);
            REQUIRE(ex.best_psl == pr.best_psl);
            REQUIRE(ex.best_energy == pr.best_energy);
            REQUIRE(optimum_texts(ex) == optimum_texts(pr));
        }
    }
}

TEST_CASE("results do not depend on the worker count") {
    for (Objective objective : {Objective::min_psl, Objective::max_merit_factor}) {
        SearchSpec spec = make(12, objective);
        const SearchResult base = pruned_search(spec);
        spec.threads = 4;
        const SearchResult threaded = pruned_search(spec);
        REQUIRE(base.best_psl == threaded.best_psl);
        REQUIRE(base.best_energy == threaded.best_energy);
        REQUIRE(optimum_texts(base) == optimum_texts(threaded));

        SearchSpec espec = make(12, objective);
        espec.threads = 4;
        const SearchResult ex = exhaustive_search(espec);
        REQUIRE(ex.best_psl == base.best_psl);
        REQUIRE(optimum_texts(ex) == optimum_texts(base));
    }
}

TEST_CASE("reversal quotient halves the reported set") {
    SearchSpec spec = make(13, Objective::min_psl);
    spec.quotient_reversal = true;
    const SearchResult r = pruned_search(spec);
    REQUIRE(r.best_psl.has_value());
    CHECK(*r.best_psl == 1);
    REQUIRE(r.optima.size() == 1);
    CHECK(r.optima[0].to_string() == kBarker13);

    SearchSpec plain = make(13, Objective::min_psl);
    const SearchResult full = pruned_search(plain);
    CHECK(full.optima.size() == 2);
}

TEST_CASE("no sequence attaining the bound is ever pruned") {
    // Replay every cut branch against the oracle: all completions of a
    // pruned border must exceed the cap recorded at the cut.
    for (std::int64_t n = 10; n <= 14; ++n) {
        SearchSpec spec = make(n, Objective::min_psl);
        spec.bound = 1;
        spec.collect_prune_log = true;
        const SearchResult r = pruned_search(spec);
        REQUIRE(r.nodes_pruned == r.prune_log.size());
        for (const PruneEvent& e : r.prune_log) {
            REQUIRE_FALSE(e.merit_energy);
            const std::int64_t free = n - static_cast<std::int64_t>(e.prefix.size()) -
                                      static_cast<std::int64_t>(e.suffix.size());
            REQUIRE(free >= 0);
            std::int64_t best_completion = std::numeric_limits<std::int64_t>::max();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free); ++mask) {
                std::string text = e.prefix;
                for (std::int64_t b = 0; b < free; ++b)
                    text.push_back((mask >> b) & 1 ? '-' : '+');
                text.append(e.suffix.rbegin(), e.suffix.rend());
                const BinarySequence a = BinarySequence::parse(text, TextFormat::sign_chars);
                best_completion = std::min(
                    best_completion, peak_sidelobe_level(aperiodic_direct(a)));
            }
            REQUIRE(best_completion > e.cap);
        }
    }
}

TEST_CASE("partial evaluation of the worked border example") {
    PartialRunInfo p;
    p.prefix_runs = {5, 2, 2, 1};
    p.prefix_open = 2;
    p.suffix_runs = {4, 1, 3};
    p.suffix_open = 4;
    p.border = 12;
    p.gamma_parity = GammaParity::even;

    const PartialEvaluation ev = evaluate_partial(p, 5);
    REQUIRE(ev.cases.size() == 1);
    CHECK(ev.cases[0].tail_run ==
          std::vector<std::int64_t>{0, 0, 0, -1, 0, 0, 1, -1, 1, -1, -2});
}

TEST_CASE("partial evaluation with both parities") {
    PartialRunInfo p;
    p.prefix_runs = {2};
    p.prefix_open = 1;
    p.suffix_runs = {1};
    p.suffix_open = 2;
    p.border = 3;
    const PartialEvaluation ev = evaluate_partial(p, 1);
    REQUIRE(ev.cases.size() == 2);
    CHECK(ev.cases[0].parity == GammaParity::even);
    CHECK(ev.cases[1].parity == GammaParity::odd);
    // Opposite parities negate the tail run values and the seed.
    REQUIRE(ev.cases[0].tail_run.size() == ev.cases[1].tail_run.size());
    for (std::size_t i = 0; i < ev.cases[0].tail_run.size(); ++i)
        CHECK(ev.cases[0].tail_run[i] == -ev.cases[1].tail_run[i]);
}

TEST_CASE("partial evaluation of a width-one border") {
    PartialRunInfo p;
    p.prefix_runs = {};
    p.prefix_open = 1;
    p.suffix_runs = {};
    p.suffix_open = 1;
    p.border = 1;
    p.gamma_parity = GammaParity::odd;
    const PartialEvaluation ev = evaluate_partial(p, 0);
    CHECK(ev.feasible);  // nothing determined below the border
    REQUIRE(ev.cases.size() == 1);
    CHECK(ev.cases[0].tail_run.empty());
    CHECK(ev.cases[0].high_autocorr == std::vector<std::int64_t>{1});
}

TEST_CASE("full-width partial reproduces the high autocorrelations") {
    const RunLengthEncoding r(1, {7, 3, 3});
    PartialRunInfo p;
    p.prefix_runs = r.runs;
    p.prefix_open = 0;
    p.suffix_runs.assign(r.runs.rbegin(), r.runs.rend());
    p.suffix_open = 0;
    p.border = 13;
    p.gamma_parity = GammaParity::odd;

    const PartialEvaluation ev = evaluate_partial(p, 13);
    REQUIRE(ev.cases.size() == 1);
    const AutocorrVector c = aperiodic_direct(from_rle(r));
    REQUIRE(ev.cases[0].high_autocorr.size() == 13);
    for (std::int64_t k = 1; k <= 13; ++k)
        REQUIRE(ev.cases[0].high_autocorr[static_cast<std::size_t>(k - 1)] == c.at(13 - k));
}

TEST_CASE("partial evaluation agrees with borders of real sequences") {
    // For every sequence and border width, the determined values must match
    // the directly computed autocorrelations.
    for (std::int64_t n = 6; n <= 10; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<std::int8_t> elems(static_cast<std::size_t>(n));
            for (std::int64_t i = 0; i < n; ++i)
                elems[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
            const BinarySequence a(elems);
            const AutocorrVector c = aperiodic_direct(a);
            for (std::int64_t m = 1; m <= n / 2; ++m) {
                std::vector<std::int8_t> prefix(elems.begin(), elems.begin() + m);
                std::vector<std::int8_t> suffix_rev(elems.rbegin(), elems.rbegin() + m);
                const PartialRunInfo p = PartialRunInfo::from_border(prefix, suffix_rev);
                const PartialEvaluation ev = evaluate_partial(p, n);
                REQUIRE(ev.cases.size() == 1);
                for (std::int64_t k = 1; k <= m; ++k)
                    REQUIRE(ev.cases[0].high_autocorr[static_cast<std::size_t>(k - 1)] ==
                            c.at(n - k));
            }
        }
    }
}

TEST_CASE("search specification errors") {
    CHECK_THROWS_AS(exhaustive_search(make(1, Objective::min_psl)), std::invalid_argument);
    CHECK_THROWS_AS(exhaustive_search(make(25, Objective::min_psl)), std::invalid_argument);
    {
        SearchSpec spec = make(25, Objective::min_psl);
        spec.restrict_skew = true;
        CHECK_NOTHROW(exhaustive_search(spec));  // skew space is only 2^12
    }
    {
        SearchSpec spec = make(12, Objective::min_psl);
        spec.restrict_skew = true;  // even length
        CHECK_THROWS_AS(exhaustive_search(spec), std::invalid_argument);
    }
    {
        SearchSpec spec = make(12, Objective::min_psl);
        spec.prune_depth = 7;  // above ceil(n/2)
        CHECK_THROWS_AS(pruned_search(spec), std::invalid_argument);
    }
    {
        SearchSpec spec = make(12, Objective::min_psl);
        spec.bound = -1;
        CHECK_THROWS_AS(pruned_search(spec), std::invalid_argument);
    }
}

TEST_CASE("prune depth limits the checks but not correctness") {
    for (std::int64_t depth : {1, 2, 3}) {
        SearchSpec spec = make(12, Objective::min_psl);
        spec.prune_depth = depth;
        const SearchResult pr = pruned_search(spec);
        const SearchResult ex = exhaustive_search(make(12, Objective::min_psl));
        REQUIRE(pr.best_psl == ex.best_psl);
        REQUIRE(optimum_texts(pr) == optimum_texts(ex));
    }
}
