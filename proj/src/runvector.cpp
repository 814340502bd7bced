#include "runcorr/runvector.hpp"

#include <algorithm>
#include <stdexcept>

namespace runcorr {

RunVector::RunVector(CorrelationKind kind, std::int64_t n, std::int64_t gamma,
                     std::vector<std::int64_t> values)
    : kind_(kind), n_(n), gamma_(gamma), values_(std::move(values)) {
    if (n_ < 1) throw std::invalid_argument("run vector needs n >= 1");
    if (static_cast<std::int64_t>(values_.size()) != n_ - 1)
        throw std::invalid_argument("run vector must have n-1 entries");
    if (gamma_ < 0 || gamma_ > n_) throw std::invalid_argument("run count out of range");
}

std::int64_t RunVector::at(std::int64_t k) const {
    if (k < 1 || k > n_ - 1) throw std::out_of_range("run vector lag out of range");
    return values_[static_cast<std::size_t>(k - 1)];
}

std::vector<std::int64_t> second_difference(std::span<const std::int64_t> v) {
    if (v.size() < 3) throw std::invalid_argument("second difference needs at least 3 values");
    std::vector<std::int64_t> out(v.size() - 2);
    for (std::size_t j = 0; j + 2 < v.size(); ++j) out[j] = v[j + 2] - 2 * v[j + 1] + v[j];
    return out;
}

RunVector run_vector(const RunLengthEncoding& r, std::int64_t* additions) {
    const std::int64_t n = r.total_length();
    const std::int64_t gamma = r.gamma();
    std::vector<std::int64_t> R(static_cast<std::size_t>(n - 1), 0);
    std::int64_t adds = 0;

    // Outer pass: every proper prefix of the run list contributes at its cut
    // position s, and the complementary suffix at n-s with the sign fixed up
    // by the parity of the total run count.
    const bool gamma_even = (gamma % 2 == 0);
    std::int64_t alpha = -1;
    std::int64_t s = 0;
    for (std::int64_t j = 1; j <= gamma - 1; ++j) {
        s += r.runs[static_cast<std::size_t>(j - 1)];
        ++adds;
        R[static_cast<std::size_t>(s - 1)] += alpha;
        ++adds;
        const std::int64_t mirror = n - s;
        ++adds;
        R[static_cast<std::size_t>(mirror - 1)] += gamma_even ? alpha : -alpha;
        ++adds;
        alpha = -alpha;
    }

    // Inner pass: substrings of the run list that touch neither end count
    // with doubled weight.
    for (std::int64_t i = 2; i <= gamma - 1; ++i) {
        std::int64_t beta = -2;
        std::int64_t t = 0;
        for (std::int64_t j = i; j <= gamma - 1; ++j) {
            t += r.runs[static_cast<std::size_t>(j - 1)];
            ++adds;
            R[static_cast<std::size_t>(t - 1)] += beta;
            ++adds;
            beta = -beta;
        }
    }

    if (additions) *additions = adds;
    return RunVector(CorrelationKind::aperiodic, n, gamma, std::move(R));
}

RunVector run_vector_bruteforce(const RunLengthEncoding& r) {
    const std::int64_t n = r.total_length();
    const std::int64_t gamma = r.gamma();
    std::vector<std::int64_t> cuts(static_cast<std::size_t>(gamma) + 1, 0);
    for (std::int64_t j = 1; j <= gamma; ++j)
        cuts[static_cast<std::size_t>(j)] =
            cuts[static_cast<std::size_t>(j - 1)] + r.runs[static_cast<std::size_t>(j - 1)];

    // Substring r(p,q) covers runs p..q-1; it counts double when it touches
    // neither end of the run list, and its sign flips with each extra run.
    std::vector<std::int64_t> R(static_cast<std::size_t>(n - 1), 0);
    for (std::int64_t p = 1; p <= gamma; ++p) {
        for (std::int64_t q = p + 1; q <= gamma + 1; ++q) {
            if (p == 1 && q == gamma + 1) continue;  // whole list, total length n
            const std::int64_t k =
                cuts[static_cast<std::size_t>(q - 1)] - cuts[static_cast<std::size_t>(p - 1)];
            const std::int64_t weight = (p > 1 && q < gamma + 1) ? 2 : 1;
            const std::int64_t sign = ((q - p) % 2 != 0) ? -1 : 1;
            R[static_cast<std::size_t>(k - 1)] += weight * sign;
        }
    }
    return RunVector(CorrelationKind::aperiodic, n, gamma, std::move(R));
}

int PrefixSumTables::front_sign(std::int64_t x) const {
    if (x < 1 || x > n - 1) return 0;
    return front_dense[static_cast<std::size_t>(x)];
}

int PrefixSumTables::back_sign(std::int64_t x) const {
    if (x < 1 || x > n - 1) return 0;
    return back_dense[static_cast<std::size_t>(x)];
}

PrefixSumTables prefix_sum_tables(const RunLengthEncoding& r) {
    PrefixSumTables t;
    t.n = r.total_length();
    t.gamma = r.gamma();
    t.front_dense.assign(static_cast<std::size_t>(t.n), 0);
    t.back_dense.assign(static_cast<std::size_t>(t.n), 0);
    std::int64_t s = 0;
    for (std::int64_t j = 1; j <= t.gamma - 1; ++j) {
        s += r.runs[static_cast<std::size_t>(j - 1)];
        t.front_cuts.push_back(s);
        t.front_dense[static_cast<std::size_t>(s)] = (j % 2 != 0) ? -1 : 1;
    }
    std::int64_t u = 0;
    for (std::int64_t j = 1; j <= t.gamma - 1; ++j) {
        u += r.runs[static_cast<std::size_t>(t.gamma - j)];
        t.back_cuts.push_back(u);
        t.back_dense[static_cast<std::size_t>(u)] = (j % 2 != 0) ? -1 : 1;
    }
    return t;
}

RunVector run_vector_prefix_formula(const RunLengthEncoding& r) {
    const PrefixSumTables t = prefix_sum_tables(r);
    const std::int64_t n = t.n;
    const std::int64_t gamma = t.gamma;
    const int gamma_sign = (gamma % 2 == 0) ? 1 : -1;
    std::vector<std::int64_t> R(static_cast<std::size_t>(n - 1), 0);
    for (std::int64_t k = 1; k <= n - 1; ++k) {
        std::int64_t v = t.front_sign(k) + gamma_sign * t.front_sign(n - k);
        std::int64_t shifted = 0;
        for (std::int64_t j = 1; j <= gamma - 1; ++j) {
            const std::int64_t sj = t.front_cuts[static_cast<std::size_t>(j - 1)];
            const int f = t.front_sign(sj - k);
            shifted += (j % 2 != 0) ? -f : f;
        }
        R[static_cast<std::size_t>(k - 1)] = v + 2 * shifted;
    }
    return RunVector(CorrelationKind::aperiodic, n, gamma, std::move(R));
}

namespace {

AutocorrVector finish_vector(CorrelationKind kind, std::vector<std::int64_t> values) {
    try {
        return AutocorrVector(kind, std::move(values));
    } catch (const std::invalid_argument& e) {
        throw ReconstructionError(std::string("reconstructed vector is invalid: ") + e.what());
    }
}

}  // namespace

AutocorrVector autocorr_from_runvector(const RunVector& rv) {
    if (rv.kind() != CorrelationKind::aperiodic)
        throw std::invalid_argument("expected an aperiodic run vector");
    const std::int64_t n = rv.n();
    const std::int64_t gamma = rv.gamma();
    std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = n;
    c[1] = n + 1 - 2 * gamma;
    for (std::int64_t k = 1; k <= n - 1; ++k)
        c[static_cast<std::size_t>(k + 1)] =
            2 * c[static_cast<std::size_t>(k)] - c[static_cast<std::size_t>(k - 1)] - 2 * rv.at(k);
    if (c[static_cast<std::size_t>(n)] != 0)
        throw ReconstructionError("reconstruction did not reach 0 at lag n; "
                                  "inconsistent run vector or run count");
    const std::int64_t expected_last = (gamma % 2 != 0) ? 1 : -1;
    if (n >= 2 && c[static_cast<std::size_t>(n - 1)] != expected_last)
        throw ReconstructionError("reconstruction reached the wrong value at lag n-1");
    return finish_vector(CorrelationKind::aperiodic, std::move(c));
}

AutocorrVector autocorr_from_runvector_backward(const RunVector& rv) {
    if (rv.kind() != CorrelationKind::aperiodic)
        throw std::invalid_argument("expected an aperiodic run vector");
    const std::int64_t n = rv.n();
    const std::int64_t gamma = rv.gamma();
    const std::int64_t last_sign = (gamma % 2 != 0) ? 1 : -1;

    // C_k = s*(n-k) - 2 * sum_{j>k} (j-k) R_j with s = +/-1 from the run
    // count parity; the weighted tail sums are accumulated from the high end.
    std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
    std::int64_t tail = 0;           // sum of R_j for j > k
    std::int64_t weighted_tail = 0;  // sum of (j-k) R_j for j > k
    c[static_cast<std::size_t>(n)] = 0;
    for (std::int64_t k = n - 1; k >= 0; --k) {
        weighted_tail += tail;
        if (k + 1 <= n - 1) {
            const std::int64_t r = rv.at(k + 1);
            tail += r;
            weighted_tail += r;
        }
        c[static_cast<std::size_t>(k)] = last_sign * (n - k) - 2 * weighted_tail;
    }
    if (c[0] != n)
        throw ReconstructionError("backward reconstruction did not reach n at lag 0; "
                                  "inconsistent run vector or run count");
    return finish_vector(CorrelationKind::aperiodic, std::move(c));
}

AutocorrVector autocorr_fast(const BinarySequence& a, bool allow_alternation) {
    const std::int64_t n = a.length();
    const RunLengthEncoding rle = to_rle(a);
    if (allow_alternation && 2 * rle.gamma() > n + 1) {
        // The flipped-every-second-element sequence has n+1-gamma runs and
        // the same autocorrelations up to alternating signs.
        const AutocorrVector flipped = autocorr_from_runvector(run_vector(to_rle(alternate(a))));
        std::vector<std::int64_t> c = flipped.values();
        for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
        return AutocorrVector(CorrelationKind::aperiodic, std::move(c));
    }
    return autocorr_from_runvector(run_vector(rle));
}

RunVector periodic_run_vector(const RunLengthEncoding& r) {
    const std::int64_t gamma = r.gamma();
    if (gamma == 1)
        throw std::invalid_argument("constant sequence: use the all-zero run vector with "
                                    "run count 0 instead");
    if (gamma % 2 != 0)
        throw std::invalid_argument("periodic run vector needs an even run count; "
                                    "rotate the sequence so its ends differ");
    const std::int64_t n = r.total_length();
    const RunVector rv = run_vector(r);
    std::vector<std::int64_t> out(static_cast<std::size_t>(n - 1), 0);
    for (std::int64_t k = 1; k <= n - 1; ++k) {
        const std::int64_t sum = rv.at(k) + rv.at(n - k);
        if (sum % 2 != 0)
            throw std::logic_error("internal error: odd half-sum at lag " + std::to_string(k));
        out[static_cast<std::size_t>(k - 1)] = sum / 2;
    }
    return RunVector(CorrelationKind::periodic, n, gamma, std::move(out));
}

RunVector periodic_run_vector_bruteforce(const RunLengthEncoding& r) {
    const std::int64_t gamma = r.gamma();
    if (gamma == 1)
        throw std::invalid_argument("constant sequence: use the all-zero run vector with "
                                    "run count 0 instead");
    if (gamma % 2 != 0)
        throw std::invalid_argument("periodic run vector needs an even run count; "
                                    "rotate the sequence so its ends differ");
    const std::int64_t n = r.total_length();
    std::vector<std::int64_t> cuts(static_cast<std::size_t>(gamma) + 1, 0);
    for (std::int64_t j = 1; j <= gamma; ++j)
        cuts[static_cast<std::size_t>(j)] =
            cuts[static_cast<std::size_t>(j - 1)] + r.runs[static_cast<std::size_t>(j - 1)];

    // Cyclic substrings r(i,j) with i != j: runs i..j-1, wrapping past the
    // end when j < i. Every one weighs +/-1 by the parity of its run count.
    std::vector<std::int64_t> R(static_cast<std::size_t>(n - 1), 0);
    for (std::int64_t i = 1; i <= gamma; ++i) {
        for (std::int64_t j = 1; j <= gamma; ++j) {
            if (i == j) continue;
            std::int64_t k;
            std::int64_t len;
            if (i < j) {
                k = cuts[static_cast<std::size_t>(j - 1)] - cuts[static_cast<std::size_t>(i - 1)];
                len = j - i;
            } else {
                k = (n - cuts[static_cast<std::size_t>(i - 1)]) +
                    cuts[static_cast<std::size_t>(j - 1)];
                len = gamma + j - i;
            }
            R[static_cast<std::size_t>(k - 1)] += (len % 2 != 0) ? -1 : 1;
        }
    }
    return RunVector(CorrelationKind::periodic, n, gamma, std::move(R));
}

AutocorrVector periodic_autocorr_from_runvector(const RunVector& rv) {
    if (rv.kind() != CorrelationKind::periodic)
        throw std::invalid_argument("expected a periodic run vector");
    const std::int64_t n = rv.n();
    const std::int64_t gamma = rv.gamma();
    std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = n;
    if (n >= 1) c[1] = n - 2 * gamma;
    for (std::int64_t k = 1; k <= n - 1; ++k)
        c[static_cast<std::size_t>(k + 1)] =
            2 * c[static_cast<std::size_t>(k)] - c[static_cast<std::size_t>(k - 1)] - 4 * rv.at(k);
    if (c[static_cast<std::size_t>(n)] != n)
        throw ReconstructionError("periodic reconstruction did not reach n at lag n; "
                                  "inconsistent run vector or run count");
    return finish_vector(CorrelationKind::periodic, std::move(c));
}

AutocorrVector periodic_autocorr_from_runvector_backward(const RunVector& rv) {
    if (rv.kind() != CorrelationKind::periodic)
        throw std::invalid_argument("expected a periodic run vector");
    const std::int64_t n = rv.n();
    const std::int64_t gamma = rv.gamma();
    std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
    std::int64_t tail = 0;
    std::int64_t weighted_tail = 0;
    c[static_cast<std::size_t>(n)] = n;
    for (std::int64_t k = n - 1; k >= 0; --k) {
        weighted_tail += tail;
        if (k + 1 <= n - 1) {
            const std::int64_t r = rv.at(k + 1);
            tail += r;
            weighted_tail += r;
        }
        c[static_cast<std::size_t>(k)] = n - 2 * gamma * (n - k) - 4 * weighted_tail;
    }
    if (c[0] != n)
        throw ReconstructionError("backward periodic reconstruction did not reach n at lag 0; "
                                  "inconsistent run vector or run count");
    return finish_vector(CorrelationKind::periodic, std::move(c));
}

CanonicalRotation canonicalize_periodic(const BinarySequence& a) {
    const std::int64_t n = a.length();
    std::int64_t change = -1;
    for (std::int64_t i = 1; i < n; ++i) {
        if (a[i] != a[i - 1]) {
            change = i;
            break;
        }
    }
    if (change < 0)
        throw std::invalid_argument("constant sequence has no rotation with differing ends");
    if (a[0] != a[n - 1]) return CanonicalRotation{a, 0};
    return CanonicalRotation{rotate_left(a, change), change};
}

void PartialRunInfo::validate() const {
    if (border < 1) throw std::invalid_argument("border must be at least 1");
    if (prefix_open < 0 || suffix_open < 0)
        throw std::invalid_argument("open run lengths must be non-negative");
    std::int64_t p = prefix_open;
    for (std::int64_t r : prefix_runs) {
        if (r < 1) throw std::invalid_argument("prefix run lengths must be positive");
        p += r;
    }
    std::int64_t s = suffix_open;
    for (std::int64_t r : suffix_runs) {
        if (r < 1) throw std::invalid_argument("suffix run lengths must be positive");
        s += r;
    }
    if (p != border || s != border)
        throw std::invalid_argument("prefix and suffix runs must each cover the border exactly");
}

PartialRunInfo PartialRunInfo::from_border(std::span<const std::int8_t> prefix,
                                           std::span<const std::int8_t> suffix) {
    if (prefix.empty() || suffix.empty())
        throw std::invalid_argument("border must contain at least one element on each side");
    const std::size_t m = std::min(prefix.size(), suffix.size());

    PartialRunInfo info;
    info.border = static_cast<std::int64_t>(m);

    std::int64_t run = 1;
    for (std::size_t i = 1; i < m; ++i) {
        if (prefix[i] == prefix[i - 1]) {
            ++run;
        } else {
            info.prefix_runs.push_back(run);
            run = 1;
        }
    }
    info.prefix_open = run;  // the trailing run may extend past the border

    run = 1;
    for (std::size_t i = 1; i < m; ++i) {
        if (suffix[i] == suffix[i - 1]) {
            ++run;
        } else {
            info.suffix_runs.push_back(run);
            run = 1;
        }
    }
    info.suffix_open = run;

    info.gamma_parity = (prefix[0] != suffix[0]) ? GammaParity::even : GammaParity::odd;
    return info;
}

int PartialTables::front_sign(std::int64_t x) const {
    if (x < 1 || x >= border) return 0;
    return front_dense[static_cast<std::size_t>(x)];
}

int PartialTables::back_sign(std::int64_t x) const {
    if (x < 1 || x >= border) return 0;
    return back_dense[static_cast<std::size_t>(x)];
}

PartialTables partial_tables(const PartialRunInfo& p) {
    p.validate();
    PartialTables t;
    t.border = p.border;
    t.front_dense.assign(static_cast<std::size_t>(p.border), 0);
    t.back_dense.assign(static_cast<std::size_t>(p.border), 0);
    std::int64_t s = 0;
    std::int64_t j = 0;
    for (std::int64_t r : p.prefix_runs) {
        s += r;
        ++j;
        if (s >= p.border) break;  // a cut at the border itself is not usable
        t.front_cuts.push_back(s);
        t.front_dense[static_cast<std::size_t>(s)] = (j % 2 != 0) ? -1 : 1;
    }
    s = 0;
    j = 0;
    for (std::int64_t r : p.suffix_runs) {
        s += r;
        ++j;
        if (s >= p.border) break;
        t.back_cuts.push_back(s);
        t.back_dense[static_cast<std::size_t>(s)] = (j % 2 != 0) ? -1 : 1;
    }
    return t;
}

std::vector<std::int64_t> tail_run_values(const PartialTables& t, GammaParity parity) {
    const std::int64_t m = t.border;
    const std::int64_t parity_sign = (parity == GammaParity::even) ? 1 : -1;
    std::vector<std::int64_t> out(m >= 1 ? static_cast<std::size_t>(m - 1) : 0, 0);
    for (std::int64_t k = 1; k <= m - 1; ++k) {
        std::int64_t v = t.front_sign(k) + t.back_sign(k);
        std::int64_t inner = 0;
        for (std::size_t idx = 0; idx < t.front_cuts.size(); ++idx) {
            const std::int64_t sj = t.front_cuts[idx];
            if (sj >= k) break;  // later cuts only shift further left of 1
            const int f = t.back_sign(k - sj);
            inner += ((idx + 1) % 2 != 0) ? -f : f;
        }
        v += 2 * inner;
        out[static_cast<std::size_t>(k - 1)] = parity_sign * v;
    }
    return out;
}

std::vector<std::int64_t> tail_run_values(const PartialRunInfo& p) {
    if (!p.gamma_parity)
        throw std::invalid_argument("tail run values need the run-count parity");
    return tail_run_values(partial_tables(p), *p.gamma_parity);
}

}  // namespace runcorr
