#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "analyze.hpp"
#include "bench.hpp"
#include "runcorr/search.hpp"
#include "runcorr/skew.hpp"
#include "selftest.hpp"

namespace {

using namespace runcorr;
using namespace runcorr::cli;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConsistency = 2;

std::string read_input(const std::string& arg) {
    if (!arg.empty() && arg != "-") return arg;
    std::string text;
    std::string line;
    while (std::getline(std::cin, line)) {
        if (!text.empty()) break;  // first non-empty line only
        text = line;
    }
    if (text.empty()) throw std::invalid_argument("no input given");
    return text;
}

InputFormat parse_format(const std::string& name) {
    if (name == "auto") return InputFormat::auto_detect;
    if (name == "signs") return InputFormat::signs;
    if (name == "bits") return InputFormat::bits;
    if (name == "rle") return InputFormat::rle;
    throw std::invalid_argument("unknown format '" + name + "'");
}

int cmd_analyze(const std::string& input, const std::string& format, const std::string& output) {
    const BinarySequence a = parse_input(read_input(input), parse_format(format));
    const AnalysisReport rep = analyze_sequence(a);
    if (output == "records") write_records(std::cout, rep);
    else write_text(std::cout, rep);
    return rep.all_checks_pass() ? kExitOk : kExitConsistency;
}

int cmd_convert(const std::string& input, const std::string& format, std::string to) {
    const std::string text = read_input(input);
    const InputFormat fmt = parse_format(format);
    bool input_was_rle = fmt == InputFormat::rle;
    if (fmt == InputFormat::auto_detect)
        input_was_rle =
            text.find(':') != std::string::npos || text.find(',') != std::string::npos;
    const BinarySequence a = parse_input(text, fmt);
    if (to.empty()) to = input_was_rle ? "signs" : "rle";
    if (to == "rle") std::cout << to_rle(a).to_string() << "\n";
    else if (to == "signs") std::cout << a.to_string(TextFormat::sign_chars) << "\n";
    else if (to == "bits") std::cout << a.to_string(TextFormat::bit_chars) << "\n";
    else throw std::invalid_argument("unknown target format '" + to + "'");
    return kExitOk;
}

int cmd_search(std::int64_t n, const std::string& objective, const std::string& method,
               std::optional<std::int64_t> bound, bool restrict_skew, std::int64_t prune_depth,
               bool quotient_reversal, int threads, bool force, const std::string& output,
               std::int64_t list_max) {
    SearchSpec spec;
    spec.n = n;
    spec.objective = objective == "merit" ? Objective::max_merit_factor : Objective::min_psl;
    spec.restrict_skew = restrict_skew;
    spec.prune_depth = prune_depth;
    spec.bound = bound;
    spec.quotient_reversal = quotient_reversal;
    spec.threads = threads;
    spec.override_size_limit = force;

    std::optional<SearchResult> exhaustive;
    std::optional<SearchResult> pruned;
    if (method == "exhaustive" || method == "both") exhaustive = exhaustive_search(spec);
    if (method == "pruned" || method == "both") pruned = pruned_search(spec);

    bool agree = true;
    if (exhaustive && pruned) {
        agree = exhaustive->best_psl == pruned->best_psl &&
                exhaustive->best_energy == pruned->best_energy &&
                exhaustive->optima == pruned->optima;
    }
    const SearchResult& res = pruned ? *pruned : *exhaustive;

    auto emit = [&](const SearchResult& r, const std::string& name) {
        if (output == "records") {
            std::cout << "record=search\n";
            std::cout << "method=" << name << "\n";
            std::cout << "n=" << n << "\n";
            std::cout << "objective=" << (spec.objective == Objective::min_psl ? "psl" : "merit")
                      << "\n";
            std::cout << "restrict_skew=" << (restrict_skew ? 1 : 0) << "\n";
            if (bound) std::cout << "bound=" << *bound << "\n";
            if (r.best_psl) std::cout << "best_psl=" << *r.best_psl << "\n";
            if (r.best_energy) {
                std::cout << "best_energy=" << *r.best_energy << "\n";
                std::cout << "best_merit_exact=" << r.best_merit.to_string() << "\n";
                std::cout << "best_merit=" << merit_decimal(r.best_merit) << "\n";
            }
            std::cout << "optimum_count=" << r.optima.size() << "\n";
            std::int64_t shown = 0;
            for (const BinarySequence& a : r.optima) {
                if (list_max >= 0 && shown++ >= list_max) break;
                std::cout << "optimum=" << a.to_string() << "\n";
            }
            std::cout << "nodes_visited=" << r.nodes_visited << "\n";
            std::cout << "nodes_pruned=" << r.nodes_pruned << "\n";
        } else {
            std::cout << name << " search, n=" << n << ", objective "
                      << (spec.objective == Objective::min_psl ? "min peak sidelobe"
                                                               : "max merit factor")
                      << (restrict_skew ? ", skew-symmetric candidates only" : "") << "\n";
            if (r.best_psl) std::cout << "  best psl: " << *r.best_psl << "\n";
            if (r.best_energy)
                std::cout << "  best merit factor: " << r.best_merit.to_string() << " = "
                          << merit_decimal(r.best_merit) << " (sidelobe energy "
                          << *r.best_energy << ")\n";
            if (!r.best_psl && !r.best_energy) std::cout << "  no sequence satisfies the bound\n";
            std::cout << "  optima (" << r.optima.size() << "):\n";
            std::int64_t shown = 0;
            for (const BinarySequence& a : r.optima) {
                if (list_max >= 0 && shown++ >= list_max) break;
                std::cout << "    " << a.to_string() << "\n";
            }
            std::cout << "  nodes visited: " << r.nodes_visited
                      << ", pruned: " << r.nodes_pruned << "\n";
        }
    };

    if (exhaustive) emit(*exhaustive, "exhaustive");
    if (pruned) emit(*pruned, "pruned");
    if (!agree) {
        std::cerr << "error: exhaustive and pruned searches disagree\n";
        return kExitConsistency;
    }
    (void)res;
    return kExitOk;
}

int cmd_skew_enum(std::int64_t gamma, bool expand_signs, const std::string& output) {
    const std::vector<RunLengthEncoding> all = enumerate_skew_symmetric(gamma);
    if (output == "records") {
        std::cout << "record=skew_enum\n";
        std::cout << "gamma=" << gamma << "\n";
        std::cout << "count=" << all.size() << "\n";
    }
    for (const RunLengthEncoding& r : all) {
        if (expand_signs) {
            const BinarySequence a = from_rle(r);
            if (output == "records") {
                std::cout << "sequence=" << a.to_string() << "\n";
                std::cout << "sequence=" << negate(a).to_string() << "\n";
            } else {
                std::cout << a.to_string() << "\n" << negate(a).to_string() << "\n";
            }
        } else {
            if (output == "records") std::cout << "rle=" << r.to_string() << "\n";
            else std::cout << r.to_string() << "\n";
        }
    }
    return kExitOk;
}

int cmd_skew_facts(const std::string& input, const std::string& format,
                   const std::string& output) {
    const BinarySequence a = parse_input(read_input(input), parse_format(format));
    const SkewFactsReport rep = skew_autocorr_facts(a);
    if (output == "records") {
        std::cout << "record=skew_facts\n";
        std::cout << "n=" << rep.n << "\n";
        std::cout << "gamma=" << rep.gamma << "\n";
        std::cout << "aperiodic=" << join_values(rep.autocorr.values()) << "\n";
        std::cout << "run_vector=" << join_values(rep.run_values.values()) << "\n";
        std::cout << "odd_lags_zero=" << (rep.odd_lags_zero ? "pass" : "fail") << "\n";
        std::cout << "gamma_is_half=" << (rep.gamma_is_half ? "pass" : "fail") << "\n";
        std::cout << "even_lag_run_match=" << (rep.even_lag_run_match ? "pass" : "fail") << "\n";
        std::cout << "odd_lag_run_match=" << (rep.odd_lag_run_match ? "pass" : "fail") << "\n";
        std::cout << "barker=" << (rep.barker ? 1 : 0) << "\n";
        if (rep.barker)
            std::cout << "barker_run_pattern=" << (rep.barker_run_pattern ? "pass" : "fail")
                      << "\n";
    } else {
        std::cout << "n " << rep.n << ", runs " << rep.gamma << "\n";
        std::cout << "aperiodic C: " << join_values(rep.autocorr.values()) << "\n";
        std::cout << "run vector:  " << join_values(rep.run_values.values()) << "\n";
        std::cout << "odd lags all zero:            " << (rep.odd_lags_zero ? "yes" : "NO")
                  << "\n";
        std::cout << "run count is (n+1)/2:         " << (rep.gamma_is_half ? "yes" : "NO")
                  << "\n";
        std::cout << "even-lag R equals C:          " << (rep.even_lag_run_match ? "yes" : "NO")
                  << "\n";
        std::cout << "odd-lag R is -(C-+C+)/2:      " << (rep.odd_lag_run_match ? "yes" : "NO")
                  << "\n";
        std::cout << "barker: " << (rep.barker ? "yes" : "no");
        if (rep.barker)
            std::cout << " (run pattern " << (rep.barker_run_pattern ? "matches" : "MISMATCH")
                      << ")";
        std::cout << "\n";
    }
    return rep.all_hold() ? kExitOk : kExitConsistency;
}

int cmd_skew_check(const std::string& input, const std::string& format,
                   const std::string& output) {
    const std::string text = read_input(input);
    const InputFormat fmt = parse_format(format);
    const BinarySequence a = parse_input(text, fmt);
    const SkewClassification c = classify(to_rle(a));
    if (output == "records") {
        std::cout << "record=skew_check\n";
        std::cout << "rle=" << to_rle(a).to_string() << "\n";
        std::cout << "skew=" << (c.is_skew ? 1 : 0) << "\n";
        std::cout << "balanced=" << (c.is_balanced ? 1 : 0) << "\n";
        std::cout << "reducible=" << (c.is_reducible ? 1 : 0) << "\n";
        if (c.reduction) std::cout << "reduction=" << c.reduction->to_string() << "\n";
    } else {
        std::cout << "skew-symmetric: " << (c.is_skew ? "yes" : "no") << "\n";
        std::cout << "balanced:       " << (c.is_balanced ? "yes" : "no") << "\n";
        std::cout << "reducible:      " << (c.is_reducible ? "yes" : "no") << "\n";
        if (c.reduction) std::cout << "reduction:      " << c.reduction->to_string() << "\n";
    }
    // Equality of the two predicates is a structural invariant.
    return c.is_skew == c.is_balanced ? kExitOk : kExitConsistency;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary sequence autocorrelation and run structure toolkit"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "auto";
    std::string output = "text";

    auto add_io = [&](CLI::App* sub, bool with_input) {
        if (with_input)
            sub->add_option("input", input, "sequence text; '-' or empty reads stdin");
        sub->add_option("--format", format, "input format: auto, signs, bits, rle")
            ->check(CLI::IsMember({"auto", "signs", "bits", "rle"}));
        sub->add_option("--output", output, "output style: text or records")
            ->check(CLI::IsMember({"text", "records"}));
    };

    auto* analyze = app.add_subcommand(
        "analyze", "full autocorrelation / run structure report for one sequence");
    add_io(analyze, true);

    auto* convert = app.add_subcommand("convert", "convert between sequence text formats");
    std::string convert_to;
    add_io(convert, true);
    convert->add_option("--to", convert_to, "target format: rle, signs, bits")
        ->check(CLI::IsMember({"rle", "signs", "bits"}));

    auto* selftest = app.add_subcommand("selftest", "run the built-in identity suites");
    SelfTestOptions st;
    selftest->add_option("--max-n", st.max_n, "exhaustive sweep bound (default 12)");
    selftest->add_option("--samples", st.samples, "random samples beyond the sweep");
    selftest->add_option("--seed", st.seed, "random seed");
    selftest->add_flag("--inject-bug", st.inject_bug,
                       "deliberately corrupt one identity (harness check)");

    auto* bench = app.add_subcommand("bench", "operation counts and timings per path");
    BenchOptions bo;
    bench->add_option("--sizes", bo.sizes, "sequence lengths to measure")->delimiter(',');
    bench->add_option("--trials", bo.trials, "random sequences per length");
    bench->add_option("--seed", bo.seed, "random seed");
    bench->add_option("--mode", bo.mode, "direct, runvector, prefix, or all")
        ->check(CLI::IsMember({"direct", "runvector", "prefix", "all"}));
    bench->add_flag("--alternate,!--no-alternate", bo.alternate,
                    "flip every second element when that lowers the run count");

    auto* search = app.add_subcommand("search", "low-autocorrelation sequence search");
    std::int64_t search_n = 0;
    std::string objective = "psl";
    std::string method = "pruned";
    std::int64_t bound_value = -1;
    bool restrict_skew = false;
    std::int64_t prune_depth = 0;
    bool quotient_reversal = false;
    int threads = 1;
    bool force = false;
    std::int64_t list_max = 32;
    search->add_option("n", search_n, "sequence length")->required();
    search->add_option("--objective", objective, "psl or merit")
        ->check(CLI::IsMember({"psl", "merit"}));
    search->add_option("--method", method, "exhaustive, pruned, or both")
        ->check(CLI::IsMember({"exhaustive", "pruned", "both"}));
    search->add_option("--bound", bound_value, "hard sidelobe cap (psl objective)");
    search->add_flag("--restrict-skew", restrict_skew, "skew-symmetric candidates only");
    search->add_option("--prune-depth", prune_depth, "border width used for pruning");
    search->add_flag("--quotient-reversal", quotient_reversal,
                     "report one representative per reversal pair");
    search->add_option("--threads", threads, "worker threads");
    search->add_flag("--force", force, "override the search size limit");
    search->add_option("--list-max", list_max, "optima lines to print (-1 for all)");
    search->add_option("--output", output, "output style: text or records")
        ->check(CLI::IsMember({"text", "records"}));

    auto* skew = app.add_subcommand("skew", "skew-symmetric sequence tools");
    skew->require_subcommand(1);
    auto* skew_enum = skew->add_subcommand("enum", "enumerate skew-symmetric run encodings");
    std::int64_t gamma = 1;
    bool expand_signs = false;
    skew_enum->add_option("--gamma", gamma, "number of runs")->required();
    skew_enum->add_flag("--expand-signs", expand_signs, "emit both sign expansions");
    skew_enum->add_option("--output", output, "output style: text or records")
        ->check(CLI::IsMember({"text", "records"}));
    auto* skew_facts = skew->add_subcommand("facts", "autocorrelation facts of a skew sequence");
    add_io(skew_facts, true);
    auto* skew_check = skew->add_subcommand("check", "skew / balanced / reducible classification");
    add_io(skew_check, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(input, format, output);
        if (app.got_subcommand(convert)) return cmd_convert(input, format, convert_to);
        if (app.got_subcommand(selftest)) {
            const SelfTestOutcome outcome = run_selftest(st);
            write_selftest(std::cout, outcome);
            return outcome.passed ? kExitOk : kExitConsistency;
        }
        if (app.got_subcommand(bench)) return run_bench(bo, std::cout);
        if (app.got_subcommand(search))
            return cmd_search(search_n, objective, method,
                              bound_value >= 0 ? std::optional<std::int64_t>(bound_value)
                                               : std::nullopt,
                              restrict_skew, prune_depth, quotient_reversal, threads, force,
                              output, list_max);
        if (app.got_subcommand(skew)) {
            if (skew->got_subcommand(skew_enum)) return cmd_skew_enum(gamma, expand_signs, output);
            if (skew->got_subcommand(skew_facts)) return cmd_skew_facts(input, format, output);
            if (skew->got_subcommand(skew_check)) return cmd_skew_check(input, format, output);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitConsistency;
    }
    return kExitUsage;
}
