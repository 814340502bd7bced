#include "bench.hpp"

#include <chrono>
#include <cstdio>
#include <random>

#include "runcorr/autocorr.hpp"
#include "runcorr/runvector.hpp"
#include "runcorr/sequence.hpp"

namespace runcorr::cli {

namespace {

using Clock = std::chrono::steady_clock;

double micros(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::micro>(b - a).count();
}

// Direct evaluation of lags 1..n-1 with explicit counting: one
// multiplication per product, one addition per accumulation.
struct DirectCounts {
    std::int64_t mults = 0;
    std::int64_t adds = 0;
    std::vector<std::int64_t> values;
};

DirectCounts direct_counted(const BinarySequence& a) {
    const std::int64_t n = a.length();
    DirectCounts out;
    out.values.assign(static_cast<std::size_t>(n) + 1, 0);
    out.values[0] = n;
    for (std::int64_t k = 1; k <= n - 1; ++k) {
        std::int64_t sum = a[0] * a[k];
        ++out.mults;
        for (std::int64_t i = 1; i < n - k; ++i) {
            sum += a[i] * a[i + k];
            ++out.mults;
            ++out.adds;
        }
        out.values[static_cast<std::size_t>(k)] = sum;
    }
    return out;
}

// Run length extraction with counting: one addition per element scanned
// (either extending the current run or starting the next).
RunLengthEncoding rle_counted(const BinarySequence& a, std::int64_t& adds) {
    adds += a.length();
    return to_rle(a);
}

struct Row {
    std::int64_t n = 0;
    std::int64_t gamma = 0;
    std::int64_t gamma_used = 0;
    std::int64_t direct_mults = 0;
    std::int64_t direct_adds = 0;
    double direct_us = 0;
    std::int64_t rv_adds = 0;
    double rv_us = 0;
    std::int64_t prefix_adds = 0;
    double prefix_us = 0;
};

}  // namespace

int run_bench(const BenchOptions& opt, std::ostream& os) {
    std::mt19937_64 rng(opt.seed);
    const bool want_direct = opt.mode == "all" || opt.mode == "direct";
    const bool want_rv = opt.mode == "all" || opt.mode == "runvector";
    const bool want_prefix = opt.mode == "all" || opt.mode == "prefix";

    os << "n        gamma  g_used ";
    if (want_direct) os << " direct_mult  direct_add   direct_us";
    if (want_rv) os << "      rv_add       rv_us";
    if (want_prefix) os << " prefix_add   prefix_us";
    os << "  trials\n";

    for (std::int64_t n : opt.sizes) {
        Row row;
        row.n = n;
        for (int trial = 0; trial < opt.trials; ++trial) {
            std::vector<std::int8_t> elems(static_cast<std::size_t>(n));
            for (auto& e : elems) e = (rng() & 1) ? -1 : 1;
            const BinarySequence a(std::move(elems));

            if (want_direct) {
                const auto t0 = Clock::now();
                const DirectCounts d = direct_counted(a);
                const auto t1 = Clock::now();
                row.direct_mults += d.mults;
                row.direct_adds += d.adds;
                row.direct_us += micros(t0, t1);
                if (d.mults != n * (n - 1) / 2 || d.adds != (n - 1) * (n - 2) / 2) {
                    os << "direct operation count mismatch at n=" << n << "\n";
                    return 2;
                }
            }

            if (want_rv) {
                const auto t0 = Clock::now();
                std::int64_t adds = 0;
                RunLengthEncoding rle = rle_counted(a, adds);
                row.gamma += rle.gamma();
                // Work on the flipped-every-second-element sequence when it
                // has fewer runs; its run vector gives the same
                // autocorrelations up to odd-lag signs.
                bool flipped = false;
                if (opt.alternate && 2 * rle.gamma() > n + 1) {
                    adds += n;  // per-element flips
                    rle = rle_counted(alternate(a), adds);
                    flipped = true;
                }
                row.gamma_used += rle.gamma();
                std::int64_t rv_adds = 0;
                const RunVector rv = run_vector(rle, &rv_adds);
                adds += rv_adds;
                AutocorrVector c = autocorr_from_runvector(rv);
                adds += 4 * (n - 1);  // recurrence steps
                if (flipped) {
                    std::vector<std::int64_t> vals = c.values();
                    for (std::size_t k = 1; k < vals.size(); k += 2) vals[k] = -vals[k];
                    c = AutocorrVector(CorrelationKind::aperiodic, std::move(vals));
                }
                const auto t1 = Clock::now();
                row.rv_adds += adds;
                row.rv_us += micros(t0, t1);

                const std::int64_t g = rle.gamma();
                if (rv_adds != (g - 1) * (g + 2)) {
                    os << "run vector addition count mismatch at n=" << n << ": counted "
                       << rv_adds << ", expected " << (g - 1) * (g + 2) << "\n";
                    return 2;
                }
            }

            if (want_prefix) {
                const auto t0 = Clock::now();
                const RunLengthEncoding rle = to_rle(a);
                const PrefixSumTables tables = prefix_sum_tables(rle);
                std::int64_t adds = 0;
                std::vector<std::int64_t> R(static_cast<std::size_t>(n - 1), 0);
                for (std::int64_t k = 1; k <= n - 1; ++k) {
                    const int gsign = (tables.gamma % 2 == 0) ? 1 : -1;
                    std::int64_t v = tables.front_sign(k) + gsign * tables.front_sign(n - k);
                    ++adds;
                    for (std::int64_t j = 1; j <= tables.gamma - 1; ++j) {
                        const std::int64_t sj = tables.front_cuts[static_cast<std::size_t>(j - 1)];
                        const int f = tables.front_sign(sj - k);
                        if (f != 0) {
                            v += 2 * ((j % 2 != 0) ? -f : f);
                            ++adds;
                        }
                    }
                    R[static_cast<std::size_t>(k - 1)] = v;
                }
                const auto t1 = Clock::now();
                row.prefix_adds += adds;
                row.prefix_us += micros(t0, t1);
            }
        }

        char buf[256];
        std::snprintf(buf, sizeof(buf), "%-8lld %6lld %6lld ",
                      static_cast<long long>(row.n),
                      static_cast<long long>(row.gamma / std::max(1, opt.trials)),
                      static_cast<long long>(row.gamma_used / std::max(1, opt.trials)));
        os << buf;
        if (want_direct) {
            std::snprintf(buf, sizeof(buf), " %11lld %11lld %11.1f",
                          static_cast<long long>(row.direct_mults / opt.trials),
                          static_cast<long long>(row.direct_adds / opt.trials),
                          row.direct_us / opt.trials);
            os << buf;
        }
        if (want_rv) {
            std::snprintf(buf, sizeof(buf), " %11lld %11.1f",
                          static_cast<long long>(row.rv_adds / opt.trials),
                          row.rv_us / opt.trials);
            os << buf;
        }
        if (want_prefix) {
            std::snprintf(buf, sizeof(buf), " %10lld %11.1f",
                          static_cast<long long>(row.prefix_adds / opt.trials),
                          row.prefix_us / opt.trials);
            os << buf;
        }
        std::snprintf(buf, sizeof(buf), "  %6d", opt.trials);
        os << buf << "\n";

        if (want_direct && want_rv) {
            const double ratio = row.rv_us > 0 ? row.direct_us / row.rv_us : 0.0;
            std::snprintf(buf, sizeof(buf),
                          "  n=%lld: run-vector path %.2fx faster; %lld additions vs %lld "
                          "direct operations\n",
                          static_cast<long long>(n), ratio,
                          static_cast<long long>(row.rv_adds / opt.trials),
                          static_cast<long long>((row.direct_mults + row.direct_adds) /
                                                 opt.trials));
            os << buf;
        }
    }
    return 0;
}

}  // namespace runcorr::cli
