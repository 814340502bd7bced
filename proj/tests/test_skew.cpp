#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "runcorr/autocorr.hpp"
#include "runcorr/sequence.hpp"
#include "runcorr/skew.hpp"

using namespace runcorr;

namespace {

BinarySequence seq(const std::string& text) {
    return BinarySequence::parse(text, TextFormat::sign_chars);
}

BinarySequence sequence_from_mask(std::int64_t n, std::uint64_t mask) {
    std::vector<std::int8_t> elems(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        elems[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
    return BinarySequence(std::move(elems));
}

using RunSet = std::set<std::vector<std::int64_t>>;

}  // namespace

TEST_CASE("skew predicate") {
    CHECK(is_skew_symmetric(seq("+")));
    CHECK(is_skew_symmetric(seq("+-+++")));  // runs (1,1,3)
    CHECK_FALSE(is_skew_symmetric(seq("++")));
    for (std::int64_t n = 2; n <= 8; n += 2)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
            REQUIRE_FALSE(is_skew_symmetric(sequence_from_mask(n, mask)));
}

TEST_CASE("balanced predicate") {
    CHECK(is_balanced(RunLengthEncoding(1, {1, 1, 3})));  // cuts {1,2} and {3,4} split 1..4
    CHECK_FALSE(is_balanced(RunLengthEncoding(1, {6, 7})));
    CHECK(is_balanced(RunLengthEncoding(1, {1})));  // empty split of the empty set
}

TEST_CASE("reduce") {
    CHECK(reduce(RunLengthEncoding(1, {1, 1, 3})) == RunLengthEncoding(1, {1, 2}));
    CHECK(reduce(RunLengthEncoding(1, {2, 2, 1})) == RunLengthEncoding(1, {1, 2}));
    CHECK_FALSE(reduce(RunLengthEncoding(1, {1, 2, 1})).has_value());
    CHECK_FALSE(reduce(RunLengthEncoding(1, {1})).has_value());
    CHECK_FALSE(reduce(RunLengthEncoding(1, {5})).has_value());
    CHECK_FALSE(reduce(RunLengthEncoding(1, {3, 2, 4})).has_value());
}

TEST_CASE("classification ties skew to balanced") {
    const SkewClassification c = classify(RunLengthEncoding(1, {1, 1, 3}));
    CHECK(c.is_skew);
    CHECK(c.is_balanced);
    CHECK(c.is_reducible);
    REQUIRE(c.reduction.has_value());
    CHECK(c.reduction->runs == std::vector<std::int64_t>{1, 2});
}

TEST_CASE("enumeration of skew run encodings") {
    const auto g1 = enumerate_skew_symmetric(1);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0].runs == std::vector<std::int64_t>{1});

    const auto g2 = enumerate_skew_symmetric(2);
    REQUIRE(g2.size() == 2);
    CHECK(g2[0].runs == std::vector<std::int64_t>{1, 2});
    CHECK(g2[1].runs == std::vector<std::int64_t>{2, 1});

    const auto g3 = enumerate_skew_symmetric(3);
    REQUIRE(g3.size() == 4);
    CHECK(g3[0].runs == std::vector<std::int64_t>{1, 1, 3});
    CHECK(g3[1].runs == std::vector<std::int64_t>{2, 2, 1});
    CHECK(g3[2].runs == std::vector<std::int64_t>{1, 2, 2});
    CHECK(g3[3].runs == std::vector<std::int64_t>{3, 1, 1});

    CHECK_THROWS_AS(enumerate_skew_symmetric(0), std::invalid_argument);
}

TEST_CASE("enumeration size, distinctness and membership") {
    for (std::int64_t gamma = 1; gamma <= 12; ++gamma) {
        const auto all = enumerate_skew_symmetric(gamma);
        REQUIRE(static_cast<std::int64_t>(all.size()) == std::int64_t{1} << (gamma - 1));
        RunSet distinct;
        for (const RunLengthEncoding& r : all) {
            REQUIRE(r.gamma() == gamma);
            REQUIRE(r.total_length() == 2 * gamma - 1);
            REQUIRE(is_balanced(r));
            REQUIRE(is_skew_symmetric(from_rle(r)));
            distinct.insert(r.runs);
        }
        REQUIRE(distinct.size() == all.size());
    }
}

TEST_CASE("both child moves reduce back to the parent") {
    for (std::int64_t gamma = 1; gamma <= 10; ++gamma) {
        for (const RunLengthEncoding& parent : enumerate_skew_symmetric(gamma)) {
            std::vector<std::int64_t> a;
            a.push_back(1);
            a.insert(a.end(), parent.runs.begin(), parent.runs.end());
            a.back() += 1;
            const RunLengthEncoding child_a(1, a);
            auto back_a = reduce(child_a);
            REQUIRE(back_a.has_value());
            REQUIRE(back_a->runs == parent.runs);

            std::vector<std::int64_t> b(parent.runs);
            b.front() += 1;
            b.push_back(1);
            const RunLengthEncoding child_b(1, b);
            auto back_b = reduce(child_b);
            REQUIRE(back_b.has_value());
            REQUIRE(back_b->runs == parent.runs);
        }
    }
}

TEST_CASE("skew, balanced and tree enumeration coincide") {
    // Three routes to the same family, checked as literal set equality.
    for (std::int64_t n = 1; n <= 15; n += 2) {
        const std::int64_t m = (n + 1) / 2;

        RunSet from_skew;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
            // Free first half with a_1 = +; the rest follows by symmetry.
            std::vector<std::int8_t> elems(static_cast<std::size_t>(n));
            elems[0] = 1;
            for (std::int64_t i = 1; i < m; ++i)
                elems[static_cast<std::size_t>(i)] = (mask >> (i - 1)) & 1 ? -1 : 1;
            for (std::int64_t j = 1; j <= m - 1; ++j) {
                const std::int8_t v = elems[static_cast<std::size_t>(m - j - 1)];
                elems[static_cast<std::size_t>(m + j - 1)] =
                    (j % 2 != 0) ? static_cast<std::int8_t>(-v) : v;
            }
            const BinarySequence a(elems);
            REQUIRE(is_skew_symmetric(a));
            from_skew.insert(to_rle(a).runs);
        }

        RunSet balanced;
        for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (n - 1)); ++cuts) {
            std::vector<std::int64_t> runs;
            std::int64_t run = 1;
            for (std::int64_t i = 0; i < n - 1; ++i) {
                if ((cuts >> i) & 1) {
                    runs.push_back(run);
                    run = 1;
                } else {
                    ++run;
                }
            }
            runs.push_back(run);
            const RunLengthEncoding r(1, runs);
            if (is_balanced(r)) balanced.insert(r.runs);
        }

        RunSet tree;
        for (const RunLengthEncoding& r : enumerate_skew_symmetric(m)) tree.insert(r.runs);

        REQUIRE(from_skew == balanced);
        REQUIRE(balanced == tree);
        REQUIRE(tree.size() == std::uint64_t{1} << (m - 1));
    }
}

TEST_CASE("skew autocorrelation facts") {
    const BinarySequence a = seq("+-+++");
    const SkewFactsReport rep = skew_autocorr_facts(a);
    CHECK(rep.n == 5);
    CHECK(rep.gamma == 3);
    CHECK(rep.autocorr.values() == std::vector<std::int64_t>{5, 0, 1, 0, 1, 0});
    CHECK(rep.odd_lags_zero);
    CHECK(rep.gamma_is_half);
    CHECK(rep.even_lag_run_match);
    CHECK(rep.odd_lag_run_match);
    CHECK(rep.all_hold());

    CHECK_THROWS_AS(skew_autocorr_facts(seq("++")), std::invalid_argument);
}

TEST_CASE("facts hold for every skew sequence up to n=15") {
    for (std::int64_t gamma = 1; gamma <= 8; ++gamma) {
        for (const RunLengthEncoding& r : enumerate_skew_symmetric(gamma)) {
            const SkewFactsReport rep = skew_autocorr_facts(from_rle(r));
            REQUIRE(rep.all_hold());
            REQUIRE(rep.gamma == (rep.n + 1) / 2);
        }
    }
}

TEST_CASE("barker run value pattern") {
    const BinarySequence barker = seq("+++++--++-+-+");
    const SkewFactsReport rep = skew_autocorr_facts(barker);
    CHECK(rep.barker);
    CHECK(rep.gamma == 7);
    CHECK(rep.run_values.at(1) == -7);  // odd run count: first value is -gamma
    for (std::int64_t k = 2; k <= 12; ++k)
        CHECK(rep.run_values.at(k) == ((k % 2 != 0) ? -1 : 1));  // (-1)^(k+gamma+1)
    CHECK(rep.barker_run_pattern);
    CHECK(rep.all_hold());

    const SkewFactsReport one = skew_autocorr_facts(seq("+"));
    CHECK(one.gamma == 1);
    CHECK(one.all_hold());
}
