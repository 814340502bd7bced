#include <doctest.h>

#include <random>
#include <stdexcept>

#include "runcorr/autocorr.hpp"
#include "runcorr/sequence.hpp"

using namespace runcorr;

namespace {

BinarySequence seq(const std::string& text) {
    return BinarySequence::parse(text, TextFormat::sign_chars);
}

BinarySequence random_sequence(std::mt19937_64& rng, std::int64_t n) {
    std::vector<std::int8_t> elems(static_cast<std::size_t>(n));
    for (auto& e : elems) e = (rng() & 1) ? -1 : 1;
    return BinarySequence(std::move(elems));
}

BinarySequence sequence_from_mask(std::int64_t n, std::uint64_t mask) {
    std::vector<std::int8_t> elems(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        elems[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
    return BinarySequence(std::move(elems));
}

}  // namespace

TEST_CASE("parse sign chars") {
    const BinarySequence a = seq("+++++++---+++");
    CHECK(a.length() == 13);
    CHECK(a[0] == 1);
    CHECK(a[7] == -1);
    CHECK(a[12] == 1);
    CHECK(a.to_string() == "+++++++---+++");

    const BinarySequence one = seq("+");
    CHECK(one.length() == 1);
    CHECK(one[0] == 1);
}

TEST_CASE("parse bit chars") {
    const BinarySequence a = BinarySequence::parse("1101", TextFormat::bit_chars);
    CHECK(a.elements() == std::vector<std::int8_t>{1, 1, -1, 1});
    CHECK(a.to_string(TextFormat::bit_chars) == "1101");
}

TEST_CASE("parse errors report position") {
    CHECK_THROWS_AS(BinarySequence::parse("", TextFormat::sign_chars), std::invalid_argument);
    try {
        BinarySequence::parse("++x+", TextFormat::sign_chars);
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("position 3") != std::string::npos);
    }
    CHECK_THROWS_AS(BinarySequence::parse("102", TextFormat::bit_chars), std::invalid_argument);
}

TEST_CASE("to_rle splits maximal runs") {
    const RunLengthEncoding r = to_rle(seq("+++++++---+++"));
    CHECK(r.first_sign == 1);
    CHECK(r.runs == std::vector<std::int64_t>{7, 3, 3});
    CHECK(r.gamma() == 3);
    CHECK(r.total_length() == 13);

    const RunLengthEncoding r2 = to_rle(seq("++++++-------"));
    CHECK(r2.runs == std::vector<std::int64_t>{6, 7});

    const RunLengthEncoding r3 = to_rle(seq("-"));
    CHECK(r3.first_sign == -1);
    CHECK(r3.runs == std::vector<std::int64_t>{1});
}

TEST_CASE("from_rle rebuilds the sequence") {
    CHECK(from_rle(RunLengthEncoding(1, {3, 6, 3, 3})).to_string() == "+++------+++---");
    CHECK(from_rle(RunLengthEncoding(-1, {1})).to_string() == "-");
    CHECK(from_rle(RunLengthEncoding(-1, {6, 7})) ==
          negate(from_rle(RunLengthEncoding(1, {6, 7}))));
}

TEST_CASE("rle text format") {
    CHECK(RunLengthEncoding::parse("+:7,3,3").runs == std::vector<std::int64_t>{7, 3, 3});
    CHECK(RunLengthEncoding::parse("-:1,4").first_sign == -1);
    CHECK(RunLengthEncoding::parse("7,3,3").first_sign == 1);  // missing prefix means '+'
    CHECK(RunLengthEncoding(1, {7, 3, 3}).to_string() == "+:7,3,3");
    CHECK_THROWS_AS(RunLengthEncoding::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(RunLengthEncoding::parse("+:3,,4"), std::invalid_argument);
    CHECK_THROWS_AS(RunLengthEncoding::parse("+:3,"), std::invalid_argument);
    CHECK_THROWS_AS(RunLengthEncoding::parse("x:3"), std::invalid_argument);
    CHECK_THROWS_AS(RunLengthEncoding(1, {0, 2}), std::invalid_argument);
}

TEST_CASE("length guard") {
    CHECK_THROWS_AS(RunLengthEncoding(1, {kMaxLength + 1}), std::invalid_argument);
    CHECK_NOTHROW(RunLengthEncoding(1, {kMaxLength}));
}

TEST_CASE("rle round trip exhaustive to n=12") {
    for (std::int64_t n = 1; n <= 12; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            const BinarySequence a = sequence_from_mask(n, mask);
            const RunLengthEncoding r = to_rle(a);
            REQUIRE(from_rle(r) == a);
            REQUIRE(to_rle(from_rle(r)) == r);
            REQUIRE(r.total_length() == n);
        }
    }
}

TEST_CASE("rle round trip random large") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> len(1, 4096);
    for (int t = 0; t < 50; ++t) {
        const BinarySequence a = random_sequence(rng, len(rng));
        REQUIRE(from_rle(to_rle(a)) == a);
    }
}

TEST_CASE("negate") {
    CHECK(negate(seq("+-")) == seq("-+"));
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        const BinarySequence a = random_sequence(rng, 10);
        CHECK(negate(negate(a)) == a);
        CHECK(to_rle(negate(a)).runs == to_rle(a).runs);
        CHECK(to_rle(negate(a)).first_sign == -to_rle(a).first_sign);
    }
}

TEST_CASE("rotate_left") {
    CHECK(rotate_left(seq("+--"), 1) == seq("--+"));
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        const BinarySequence a = random_sequence(rng, 1 + (rng() % 64));
        CHECK(rotate_left(a, a.length()) == a);
        const std::int64_t s = static_cast<std::int64_t>(rng() % (2 * a.length()));
        CHECK(periodic_direct(rotate_left(a, s)).values() == periodic_direct(a).values());
    }
    CHECK_THROWS_AS(rotate_left(seq("+-"), -1), std::invalid_argument);
}

TEST_CASE("alternate flips even positions") {
    const BinarySequence a = seq("++++++-------");
    const BinarySequence bar = alternate(a);
    CHECK(bar.to_string() == "+-+-+--+-+-+-");
    CHECK(to_rle(bar).gamma() == 12);
    CHECK(to_rle(a).gamma() + to_rle(bar).gamma() == a.length() + 1);
    CHECK(alternate(bar) == a);
}

TEST_CASE("alternation run-count complement exhaustive") {
    for (std::int64_t n = 1; n <= 12; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            const BinarySequence a = sequence_from_mask(n, mask);
            REQUIRE(to_rle(a).gamma() + to_rle(alternate(a)).gamma() == n + 1);
        }
    }
}

TEST_CASE("alternation flips odd-lag autocorrelations") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 30; ++t) {
        const BinarySequence a = random_sequence(rng, 1 + (rng() % 128));
        const AutocorrVector ca = aperiodic_direct(a);
        const AutocorrVector cb = aperiodic_direct(alternate(a));
        for (std::int64_t k = 0; k <= a.length(); ++k) {
            const std::int64_t expected = (k % 2 != 0) ? -ca.at(k) : ca.at(k);
            REQUIRE(cb.at(k) == expected);
        }
    }
}

TEST_CASE("repeat_elements") {
    CHECK(repeat_elements(seq("+-"), 3).to_string() == "+++---");
    CHECK_THROWS_AS(repeat_elements(seq("+-"), 0), std::invalid_argument);
    std::mt19937_64 rng(19);
    for (int t = 0; t < 20; ++t) {
        const BinarySequence a = random_sequence(rng, 1 + (rng() % 32));
        const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 4);
        const RunLengthEncoding rb = to_rle(repeat_elements(a, m));
        const RunLengthEncoding ra = to_rle(a);
        REQUIRE(rb.gamma() == ra.gamma());
        for (std::size_t j = 0; j < ra.runs.size(); ++j)
            REQUIRE(rb.runs[j] == m * ra.runs[j]);
    }
}

TEST_CASE("repetition scales specific lags") {
    // runs (6,7) doubled: lag 6 of the doubled sequence is twice lag 3.
    const BinarySequence a = from_rle(RunLengthEncoding(1, {6, 7}));
    const BinarySequence b = repeat_elements(a, 2);
    const AutocorrVector ca = aperiodic_direct(a);
    const AutocorrVector cb = aperiodic_direct(b);
    CHECK(ca.at(3) == 4);
    CHECK(cb.at(6) == 2 * ca.at(3));
    CHECK(cb.at(6) == 8);
}

TEST_CASE("repetition law against the direct oracle") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 60; ++t) {
        const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 64);
        const BinarySequence a = random_sequence(rng, n);
        for (std::int64_t m = 2; m <= 4; ++m) {
            const BinarySequence b = repeat_elements(a, m);
            const AutocorrVector ca = aperiodic_direct(a);
            const AutocorrVector cb = aperiodic_direct(b);
            for (std::int64_t k = 0; k < n; ++k)
                for (std::int64_t s = 0; s < m; ++s)
                    REQUIRE(cb.at(k * m + s) == (m - s) * ca.at(k) + s * ca.at(k + 1));
        }
    }
}
