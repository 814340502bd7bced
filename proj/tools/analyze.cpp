#include "analyze.hpp"

#include <cstdio>
#include <stdexcept>

#include "runcorr/skew.hpp"

namespace runcorr::cli {

std::string join_values(const std::vector<std::int64_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(v[i]);
    }
    return out;
}

std::string merit_decimal(const MeritFactor& m) {
    if (!m.defined()) return "undefined";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", m.value());
    return buf;
}

BinarySequence parse_input(const std::string& text, InputFormat format) {
    switch (format) {
        case InputFormat::signs:
            return BinarySequence::parse(text, TextFormat::sign_chars);
        case InputFormat::bits:
            return BinarySequence::parse(text, TextFormat::bit_chars);
        case InputFormat::rle:
            return from_rle(RunLengthEncoding::parse(text));
        case InputFormat::auto_detect:
            break;
    }
    if (text.find(':') != std::string::npos || text.find(',') != std::string::npos)
        return from_rle(RunLengthEncoding::parse(text));
    bool all_signs = true;
    bool all_bits = true;
    for (char c : text) {
        if (c != '+' && c != '-') all_signs = false;
        if (c != '0' && c != '1') all_bits = false;
    }
    if (all_signs && !text.empty()) return BinarySequence::parse(text, TextFormat::sign_chars);
    if (all_bits && !text.empty()) return BinarySequence::parse(text, TextFormat::bit_chars);
    throw std::invalid_argument("cannot detect the input format; pass --format explicitly");
}

bool AnalysisReport::all_checks_pass() const {
    for (const auto& [name, ok] : checks)
        if (!ok) return false;
    return true;
}

namespace {

bool vectors_equal(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    return a == b;
}

}  // namespace

AnalysisReport analyze_sequence(const BinarySequence& a) {
    const std::int64_t n = a.length();
    const RunLengthEncoding rle = to_rle(a);
    const std::int64_t gamma = rle.gamma();

    const AutocorrVector direct = aperiodic_direct(a);
    const RunVector rv = run_vector(rle);
    const AutocorrVector per = periodic_direct(a);

    const bool constant = gamma == 1;
    std::int64_t rotation = 0;
    RunVector per_rv =
        RunVector(CorrelationKind::periodic, n,
                  0, std::vector<std::int64_t>(static_cast<std::size_t>(n - 1), 0));
    RunLengthEncoding canon_rle = rle;
    if (!constant) {
        const CanonicalRotation canon = canonicalize_periodic(a);
        rotation = canon.shift;
        canon_rle = to_rle(canon.sequence);
        per_rv = periodic_run_vector(canon_rle);
    }

    AnalysisReport rep{a,
                       rle,
                       direct,
                       rv,
                       per,
                       per_rv,
                       rotation,
                       constant,
                       merit_factor(direct),
                       std::nullopt,
                       is_barker(a),
                       is_skew_symmetric(a),
                       {}};
    if (n >= 2) rep.psl = peak_sidelobe_level(direct);

    // Cross-checks between the independent computation paths.
    auto add = [&rep](const std::string& name, bool ok) { rep.checks.emplace_back(name, ok); };

    add("run_vector_paths_agree",
        rv == run_vector_bruteforce(rle) && rv == run_vector_prefix_formula(rle));

    bool recon_ok = true;
    try {
        recon_ok = autocorr_from_runvector(rv) == direct &&
                   autocorr_from_runvector_backward(rv) == direct;
    } catch (const ReconstructionError&) {
        recon_ok = false;
    }
    add("reconstruction_forward_backward", recon_ok);

    if (n >= 3) {
        std::vector<std::int64_t> dd = second_difference(direct.values());
        for (std::int64_t& x : dd) x = -x;
        bool ok = true;
        for (std::int64_t k = 1; k <= n - 1; ++k)
            if (dd[static_cast<std::size_t>(k - 1)] != 2 * rv.at(k)) ok = false;
        add("aperiodic_second_difference", ok);
    } else {
        add("aperiodic_second_difference", true);
    }

    {
        bool ok = true;
        for (std::int64_t k = 1; k <= n; ++k)
            if (per.at(k) != direct.at(k) + direct.at(n - k)) ok = false;
        add("periodic_decomposition", ok);
    }

    if (!constant) {
        bool ok = true;
        try {
            ok = vectors_equal(periodic_autocorr_from_runvector(per_rv).values(), per.values());
        } catch (const ReconstructionError&) {
            ok = false;
        }
        add("periodic_reconstruction", ok);

        if (n >= 3) {
            std::vector<std::int64_t> dd = second_difference(per.values());
            bool ok2 = true;
            for (std::int64_t k = 1; k <= n - 1; ++k)
                if (dd[static_cast<std::size_t>(k - 1)] != -4 * per_rv.at(k)) ok2 = false;
            add("periodic_second_difference", ok2);
        } else {
            add("periodic_second_difference", true);
        }

        // Half-sum identity against the aperiodic run vector of the
        // rotated sequence.
        const RunVector canon_rv = run_vector(canon_rle);
        bool ok3 = true;
        for (std::int64_t k = 1; k <= n - 1; ++k)
            if (2 * per_rv.at(k) != canon_rv.at(k) + canon_rv.at(n - k)) ok3 = false;
        add("periodic_half_sum", ok3);
    } else {
        add("periodic_reconstruction", true);
        add("periodic_second_difference", true);
        add("periodic_half_sum", true);
    }

    {
        std::int64_t sum = 0;
        for (std::int64_t k = 1; k <= n - 1; ++k) sum += rv.at(k);
        const std::int64_t expected = (gamma % 2 == 0) ? -gamma : 1 - gamma;
        bool ok = sum == expected;
        if (!constant) {
            std::int64_t psum = 0;
            for (std::int64_t k = 1; k <= n - 1; ++k) psum += per_rv.at(k);
            ok = ok && psum == -per_rv.gamma();
        }
        add("run_vector_sum", ok);
    }

    add("first_lag_values", direct.at(1) == n + 1 - 2 * gamma &&
                                (constant || per.at(1) == n - 2 * canon_rle.gamma()));

    return rep;
}

void write_text(std::ostream& os, const AnalysisReport& rep) {
    os << "sequence      " << rep.sequence.to_string() << "\n";
    os << "rle           " << rep.rle.to_string() << "\n";
    os << "n             " << rep.sequence.length() << "\n";
    os << "runs          " << rep.rle.gamma() << "\n";
    os << "aperiodic C   " << join_values(rep.aperiodic.values()) << "\n";
    os << "run vector R  " << join_values(rep.run_vec.values()) << "\n";
    os << "periodic C    " << join_values(rep.periodic.values()) << "\n";
    os << "periodic R    " << join_values(rep.periodic_run.values());
    if (rep.periodic_constant) os << "  (constant)";
    else if (rep.periodic_rotation) os << "  (rotated left by " << rep.periodic_rotation << ")";
    os << "\n";
    os << "merit factor  " << rep.merit.to_string();
    if (rep.merit.defined()) os << " = " << merit_decimal(rep.merit);
    os << "\n";
    os << "psl           ";
    if (rep.psl) os << *rep.psl;
    else os << "undefined";
    os << "\n";
    os << "barker        " << (rep.barker ? "yes" : "no") << "\n";
    os << "skew          " << (rep.skew ? "yes" : "no") << "\n";
    for (const auto& [name, ok] : rep.checks)
        os << "check         " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
}

void write_records(std::ostream& os, const AnalysisReport& rep) {
    os << "record=analysis\n";
    os << "sequence=" << rep.sequence.to_string() << "\n";
    os << "bits=" << rep.sequence.to_string(TextFormat::bit_chars) << "\n";
    os << "rle=" << rep.rle.to_string() << "\n";
    os << "n=" << rep.sequence.length() << "\n";
    os << "gamma=" << rep.rle.gamma() << "\n";
    os << "aperiodic=" << join_values(rep.aperiodic.values()) << "\n";
    os << "run_vector=" << join_values(rep.run_vec.values()) << "\n";
    os << "periodic=" << join_values(rep.periodic.values()) << "\n";
    os << "periodic_run_vector=" << join_values(rep.periodic_run.values()) << "\n";
    os << "periodic_rotation=" << rep.periodic_rotation << "\n";
    os << "periodic_constant=" << (rep.periodic_constant ? 1 : 0) << "\n";
    os << "merit_exact=" << rep.merit.to_string() << "\n";
    os << "merit=" << merit_decimal(rep.merit) << "\n";
    os << "psl=";
    if (rep.psl) os << *rep.psl;
    else os << "undefined";
    os << "\n";
    os << "barker=" << (rep.barker ? 1 : 0) << "\n";
    os << "skew=" << (rep.skew ? 1 : 0) << "\n";
    for (const auto& [name, ok] : rep.checks)
        os << "check_" << name << "=" << (ok ? "pass" : "fail") << "\n";
}

}  // namespace runcorr::cli
