#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "runcorr/autocorr.hpp"
#include "runcorr/runvector.hpp"
#include "runcorr/search.hpp"
#include "runcorr/sequence.hpp"
#include "runcorr/skew.hpp"

namespace py = pybind11;
using namespace runcorr;

namespace {

BinarySequence seq_from_text(const std::string& text, const std::string& format) {
    if (format == "signs") return BinarySequence::parse(text, TextFormat::sign_chars);
    if (format == "bits") return BinarySequence::parse(text, TextFormat::bit_chars);
    throw std::invalid_argument("format must be 'signs' or 'bits'");
}

BinarySequence seq_from_values(const std::vector<int>& values) {
    std::vector<std::int8_t> elems;
    elems.reserve(values.size());
    for (int v : values) elems.push_back(static_cast<std::int8_t>(v));
    return BinarySequence(std::move(elems));
}

std::vector<int> seq_values(const BinarySequence& a) {
    return std::vector<int>(a.elements().begin(), a.elements().end());
}

GammaParity parity_from_text(const std::string& text) {
    if (text == "even") return GammaParity::even;
    if (text == "odd") return GammaParity::odd;
    throw std::invalid_argument("parity must be 'even' or 'odd'");
}

PartialRunInfo make_partial(const std::vector<std::int64_t>& prefix_runs,
                            std::int64_t prefix_open,
                            const std::vector<std::int64_t>& suffix_runs,
                            std::int64_t suffix_open, std::int64_t border,
                            const std::optional<std::string>& parity) {
    PartialRunInfo p;
    p.prefix_runs = prefix_runs;
    p.prefix_open = prefix_open;
    p.suffix_runs = suffix_runs;
    p.suffix_open = suffix_open;
    p.border = border;
    if (parity) p.gamma_parity = parity_from_text(*parity);
    p.validate();
    return p;
}

SearchSpec make_spec(std::int64_t n, const std::string& objective, bool restrict_skew,
                     std::optional<std::int64_t> bound, std::int64_t prune_depth,
                     bool quotient_reversal, int threads, bool force) {
    SearchSpec spec;
    spec.n = n;
    if (objective == "psl") spec.objective = Objective::min_psl;
    else if (objective == "merit") spec.objective = Objective::max_merit_factor;
    else throw std::invalid_argument("objective must be 'psl' or 'merit'");
    spec.restrict_skew = restrict_skew;
    spec.bound = bound;
    spec.prune_depth = prune_depth;
    spec.quotient_reversal = quotient_reversal;
    spec.threads = threads;
    spec.override_size_limit = force;
    return spec;
}

}  // namespace

PYBIND11_MODULE(_runcorr, m) {
    m.doc() = "autocorrelations of binary sequences through their run structure";

    py::class_<BinarySequence>(m, "BinarySequence")
        .def(py::init(&seq_from_values), py::arg("values"))
        .def(py::init(&seq_from_text), py::arg("text"), py::arg("format") = "signs")
        .def("__len__", &BinarySequence::length)
        .def("__str__", [](const BinarySequence& a) { return a.to_string(); })
        .def("__repr__",
             [](const BinarySequence& a) { return "BinarySequence('" + a.to_string() + "')"; })
        .def("__eq__", [](const BinarySequence& a, const BinarySequence& b) { return a == b; })
        .def("__getitem__",
             [](const BinarySequence& a, std::int64_t i) {
                 if (i < 0) i += a.length();
                 if (i < 0 || i >= a.length()) throw py::index_error();
                 return static_cast<int>(a[i]);
             })
        .def_property_readonly("values", &seq_values)
        .def("to_string", [](const BinarySequence& a, const std::string& format) {
            return a.to_string(format == "bits" ? TextFormat::bit_chars
                                                : TextFormat::sign_chars);
        }, py::arg("format") = "signs");

    py::class_<RunLengthEncoding>(m, "RunLengthEncoding")
        .def(py::init([](int first_sign, const std::vector<std::int64_t>& runs) {
                 return RunLengthEncoding(static_cast<std::int8_t>(first_sign), runs);
             }),
             py::arg("first_sign"), py::arg("runs"))
        .def_static("parse", &RunLengthEncoding::parse, py::arg("text"))
        .def("__str__", &RunLengthEncoding::to_string)
        .def("__repr__",
             [](const RunLengthEncoding& r) {
                 return "RunLengthEncoding.parse('" + r.to_string() + "')";
             })
        .def("__eq__",
             [](const RunLengthEncoding& a, const RunLengthEncoding& b) { return a == b; })
        .def_property_readonly("first_sign",
                               [](const RunLengthEncoding& r) { return int(r.first_sign); })
        .def_property_readonly("runs", [](const RunLengthEncoding& r) { return r.runs; })
        .def_property_readonly("gamma", &RunLengthEncoding::gamma)
        .def_property_readonly("n", &RunLengthEncoding::total_length);

    m.def("to_rle", &to_rle, py::arg("sequence"));
    m.def("from_rle", &from_rle, py::arg("rle"));
    m.def("negate", &negate, py::arg("sequence"));
    m.def("rotate_left", &rotate_left, py::arg("sequence"), py::arg("shift"));
    m.def("alternate", &alternate, py::arg("sequence"),
          "flip every second element");
    m.def("repeat_elements", &repeat_elements, py::arg("sequence"), py::arg("m"));

    m.def("aperiodic_autocorrelation",
          [](const BinarySequence& a) { return aperiodic_direct(a).values(); },
          py::arg("sequence"), "direct-sum aperiodic autocorrelation vector C_0..C_n");
    m.def("periodic_autocorrelation",
          [](const BinarySequence& a) { return periodic_direct(a).values(); },
          py::arg("sequence"), "direct-sum periodic autocorrelation vector");
    m.def("autocorr_fast",
          [](const BinarySequence& a, bool allow_alternation) {
              return autocorr_fast(a, allow_alternation).values();
          },
          py::arg("sequence"), py::arg("allow_alternation") = true,
          "aperiodic autocorrelation through the run vector");

    py::class_<MeritFactor>(m, "MeritFactor")
        .def_readonly("numerator", &MeritFactor::numerator)
        .def_readonly("denominator", &MeritFactor::denominator)
        .def_property_readonly("defined", &MeritFactor::defined)
        .def("__float__", &MeritFactor::value)
        .def("__repr__", [](const MeritFactor& f) { return "MeritFactor(" + f.to_string() + ")"; })
        .def("__str__", &MeritFactor::to_string);

    m.def("merit_factor",
          [](const BinarySequence& a) { return merit_factor(aperiodic_direct(a)); },
          py::arg("sequence"));
    m.def("peak_sidelobe_level",
          [](const BinarySequence& a) { return peak_sidelobe_level(aperiodic_direct(a)); },
          py::arg("sequence"));
    m.def("is_barker", &is_barker, py::arg("sequence"));

    m.def("second_difference",
          [](const std::vector<std::int64_t>& v) { return second_difference(v); },
          py::arg("values"));

    m.def("run_vector",
          [](const RunLengthEncoding& r) { return run_vector(r).values(); }, py::arg("rle"),
          "run vector by the two-pass algorithm");
    m.def("run_vector_with_count",
          [](const RunLengthEncoding& r) {
              std::int64_t adds = 0;
              auto rv = run_vector(r, &adds);
              return py::make_tuple(rv.values(), adds);
          },
          py::arg("rle"), "run vector plus the exact addition count");
    m.def("run_vector_bruteforce",
          [](const RunLengthEncoding& r) { return run_vector_bruteforce(r).values(); },
          py::arg("rle"));
    m.def("run_vector_prefix_formula",
          [](const RunLengthEncoding& r) { return run_vector_prefix_formula(r).values(); },
          py::arg("rle"));
    m.def("autocorr_from_run_vector",
          [](std::int64_t n, std::int64_t gamma, const std::vector<std::int64_t>& values,
             bool backward) {
              RunVector rv(CorrelationKind::aperiodic, n, gamma, values);
              return (backward ? autocorr_from_runvector_backward(rv)
                               : autocorr_from_runvector(rv))
                  .values();
          },
          py::arg("n"), py::arg("gamma"), py::arg("values"), py::arg("backward") = false);

    m.def("periodic_run_vector",
          [](const RunLengthEncoding& r) { return periodic_run_vector(r).values(); },
          py::arg("rle"));
    m.def("periodic_run_vector_bruteforce",
          [](const RunLengthEncoding& r) { return periodic_run_vector_bruteforce(r).values(); },
          py::arg("rle"));
    m.def("periodic_autocorr_from_run_vector",
          [](std::int64_t n, std::int64_t gamma, const std::vector<std::int64_t>& values,
             bool backward) {
              RunVector rv(CorrelationKind::periodic, n, gamma, values);
              return (backward ? periodic_autocorr_from_runvector_backward(rv)
                               : periodic_autocorr_from_runvector(rv))
                  .values();
          },
          py::arg("n"), py::arg("gamma"), py::arg("values"), py::arg("backward") = false);
    m.def("canonicalize_periodic",
          [](const BinarySequence& a) {
              auto c = canonicalize_periodic(a);
              return py::make_tuple(c.sequence, c.shift);
          },
          py::arg("sequence"), "(rotated sequence, left shift) with differing ends");

    py::class_<PrefixSumTables>(m, "PrefixSumTables")
        .def_readonly("n", &PrefixSumTables::n)
        .def_readonly("gamma", &PrefixSumTables::gamma)
        .def_readonly("front_cuts", &PrefixSumTables::front_cuts)
        .def_readonly("back_cuts", &PrefixSumTables::back_cuts)
        .def("front_sign", &PrefixSumTables::front_sign, py::arg("x"))
        .def("back_sign", &PrefixSumTables::back_sign, py::arg("x"));
    m.def("prefix_sum_tables", &prefix_sum_tables, py::arg("rle"));

    m.def("tail_run_values",
          [](const std::vector<std::int64_t>& prefix_runs, std::int64_t prefix_open,
             const std::vector<std::int64_t>& suffix_runs, std::int64_t suffix_open,
             std::int64_t border, const std::string& parity) {
              return tail_run_values(make_partial(prefix_runs, prefix_open, suffix_runs,
                                                  suffix_open, border, parity));
          },
          py::arg("prefix_runs"), py::arg("prefix_open"), py::arg("suffix_runs"),
          py::arg("suffix_open"), py::arg("border"), py::arg("parity"),
          "R_{n-k} for k = 1..border-1 from border knowledge alone");

    m.def("evaluate_partial",
          [](const std::vector<std::int64_t>& prefix_runs, std::int64_t prefix_open,
             const std::vector<std::int64_t>& suffix_runs, std::int64_t suffix_open,
             std::int64_t border, const std::optional<std::string>& parity,
             std::int64_t bound) {
              const PartialEvaluation ev = evaluate_partial(
                  make_partial(prefix_runs, prefix_open, suffix_runs, suffix_open, border,
                               parity),
                  bound);
              py::list cases;
              for (const auto& c : ev.cases) {
                  py::dict d;
                  d["parity"] = c.parity == GammaParity::even ? "even" : "odd";
                  d["tail_run"] = c.tail_run;
                  d["high_autocorr"] = c.high_autocorr;
                  d["within_bound"] = c.within_bound;
                  cases.append(d);
              }
              py::dict out;
              out["feasible"] = ev.feasible;
              out["cases"] = cases;
              return out;
          },
          py::arg("prefix_runs"), py::arg("prefix_open"), py::arg("suffix_runs"),
          py::arg("suffix_open"), py::arg("border"), py::arg("parity") = std::nullopt,
          py::arg("bound") = 1);

    m.def("is_skew_symmetric", &is_skew_symmetric, py::arg("sequence"));
    m.def("is_balanced", &is_balanced, py::arg("rle"));
    m.def("reduce", &runcorr::reduce, py::arg("rle"));
    m.def("enumerate_skew_symmetric", &enumerate_skew_symmetric, py::arg("gamma"));

    py::class_<SearchResult>(m, "SearchResult")
        .def_property_readonly("objective",
                               [](const SearchResult& r) {
                                   return r.objective == Objective::min_psl ? "psl" : "merit";
                               })
        .def_property_readonly("best_psl",
                               [](const SearchResult& r) { return r.best_psl; })
        .def_property_readonly("best_energy",
                               [](const SearchResult& r) { return r.best_energy; })
        .def_property_readonly("best_merit",
                               [](const SearchResult& r) -> std::optional<MeritFactor> {
                                   if (!r.best_energy) return std::nullopt;
                                   return r.best_merit;
                               })
        .def_property_readonly("optima",
                               [](const SearchResult& r) {
                                   std::vector<std::string> out;
                                   for (const auto& a : r.optima) out.push_back(a.to_string());
                                   return out;
                               })
        .def_readonly("nodes_visited", &SearchResult::nodes_visited)
        .def_readonly("nodes_pruned", &SearchResult::nodes_pruned);

    m.def("exhaustive_search",
          [](std::int64_t n, const std::string& objective, bool restrict_skew,
             std::optional<std::int64_t> bound, std::int64_t prune_depth, bool quotient_reversal,
             int threads, bool force) {
              return exhaustive_search(make_spec(n, objective, restrict_skew, bound, prune_depth,
                                                 quotient_reversal, threads, force));
          },
          py::arg("n"), py::arg("objective") = "psl", py::arg("restrict_skew") = false,
          py::arg("bound") = std::nullopt, py::arg("prune_depth") = 0,
          py::arg("quotient_reversal") = false, py::arg("threads") = 1,
          py::arg("force") = false);
    m.def("pruned_search",
          [](std::int64_t n, const std::string& objective, bool restrict_skew,
             std::optional<std::int64_t> bound, std::int64_t prune_depth, bool quotient_reversal,
             int threads, bool force) {
              return pruned_search(make_spec(n, objective, restrict_skew, bound, prune_depth,
                                             quotient_reversal, threads, force));
          },
          py::arg("n"), py::arg("objective") = "psl", py::arg("restrict_skew") = false,
          py::arg("bound") = std::nullopt, py::arg("prune_depth") = 0,
          py::arg("quotient_reversal") = false, py::arg("threads") = 1,
          py::arg("force") = false);

    m.attr("__version__") = "1.0.0";
}
