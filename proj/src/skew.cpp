#include "runcorr/skew.hpp"

#include <stdexcept>

namespace runcorr {

bool is_skew_symmetric(const BinarySequence& a) {
    const std::int64_t n = a.length();
    if (n % 2 == 0) return false;
    const std::int64_t m = (n + 1) / 2;  // middle position, 1-based
    for (std::int64_t i = 1; i <= m - 1; ++i) {
        const int expected = (i % 2 != 0) ? -a[m + i - 1] : a[m + i - 1];
        if (a[m - i - 1] != expected) return false;
    }
    return true;
}

bool is_balanced(const RunLengthEncoding& r) {
    const std::int64_t n = r.total_length();
    const std::int64_t gamma = r.gamma();
    if (n != 2 * gamma - 1) return false;
    const PrefixSumTables t = prefix_sum_tables(r);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (std::int64_t cut : t.front_cuts) {
        if (seen[static_cast<std::size_t>(cut)]) return false;
        seen[static_cast<std::size_t>(cut)] = true;
    }
    for (std::int64_t cut : t.back_cuts) {
        if (seen[static_cast<std::size_t>(cut)]) return false;
        seen[static_cast<std::size_t>(cut)] = true;
    }
    for (std::int64_t k = 1; k <= n - 1; ++k)
        if (!seen[static_cast<std::size_t>(k)]) return false;
    return true;
}

std::optional<RunLengthEncoding> reduce(const RunLengthEncoding& r) {
    const std::int64_t gamma = r.gamma();
    if (gamma < 2) return std::nullopt;
    const std::int64_t first = r.runs.front();
    const std::int64_t last = r.runs.back();
    if (first == 1 && last > 1) {
        std::vector<std::int64_t> runs(r.runs.begin() + 1, r.runs.end());
        runs.back() -= 1;
        return RunLengthEncoding(r.first_sign, std::move(runs));
    }
    if (first > 1 && last == 1) {
        std::vector<std::int64_t> runs(r.runs.begin(), r.runs.end() - 1);
        runs.front() -= 1;
        return RunLengthEncoding(r.first_sign, std::move(runs));
    }
    return std::nullopt;
}

SkewClassification classify(const RunLengthEncoding& r) {
    SkewClassification c;
    c.is_balanced = is_balanced(r);
    c.is_skew = is_skew_symmetric(from_rle(r));
    c.reduction = reduce(r);
    c.is_reducible = c.reduction.has_value();
    return c;
}

std::vector<RunLengthEncoding> enumerate_skew_symmetric(std::int64_t gamma_target) {
    if (gamma_target < 1) throw std::invalid_argument("run count target must be at least 1");
    std::vector<RunLengthEncoding> level;
    level.emplace_back(std::int8_t{1}, std::vector<std::int64_t>{1});
    for (std::int64_t depth = 2; depth <= gamma_target; ++depth) {
        std::vector<RunLengthEncoding> next;
        next.reserve(level.size() * 2);
        for (const RunLengthEncoding& parent : level) {
            std::vector<std::int64_t> a;
            a.reserve(parent.runs.size() + 1);
            a.push_back(1);
            a.insert(a.end(), parent.runs.begin(), parent.runs.end());
            a.back() += 1;
            next.emplace_back(parent.first_sign, std::move(a));

            std::vector<std::int64_t> b(parent.runs);
            b.front() += 1;
            b.push_back(1);
            next.emplace_back(parent.first_sign, std::move(b));
        }
        level = std::move(next);
    }
    return level;
}

SkewFactsReport skew_autocorr_facts(const BinarySequence& a) {
    if (!is_skew_symmetric(a)) throw std::invalid_argument("sequence is not skew-symmetric");
    const std::int64_t n = a.length();
    const RunLengthEncoding rle = to_rle(a);
    const std::int64_t gamma = rle.gamma();

    SkewFactsReport rep{n,
                        gamma,
                        true,
                        gamma == (n + 1) / 2,
                        true,
                        true,
                        false,
                        true,
                        aperiodic_direct(a),
                        run_vector(rle)};

    for (std::int64_t k = 1; k <= n - 1; ++k) {
        if (k % 2 != 0 && rep.autocorr.at(k) != 0) rep.odd_lags_zero = false;
        if (k % 2 == 0 && rep.run_values.at(k) != rep.autocorr.at(k))
            rep.even_lag_run_match = false;
        if (k % 2 != 0) {
            const std::int64_t neighbours = rep.autocorr.at(k - 1) + rep.autocorr.at(k + 1);
            if (2 * rep.run_values.at(k) != -neighbours) rep.odd_lag_run_match = false;
        }
    }

    rep.barker = is_barker(a);
    if (rep.barker && n >= 2) {
        const std::int64_t expected_first = (gamma % 2 != 0) ? -gamma : 1 - gamma;
        if (rep.run_values.at(1) != expected_first) rep.barker_run_pattern = false;
        for (std::int64_t k = 2; k <= n - 1; ++k) {
            const std::int64_t expected = ((k + gamma + 1) % 2 != 0) ? -1 : 1;
            if (rep.run_values.at(k) != expected) rep.barker_run_pattern = false;
        }
    }
    return rep;
}

}  // namespace runcorr
