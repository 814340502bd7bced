#include "runcorr/autocorr.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace runcorr {

AutocorrVector::AutocorrVector(CorrelationKind kind, std::vector<std::int64_t> values)
    : kind_(kind), values_(std::move(values)) {
    if (values_.size() < 2)
        throw std::invalid_argument("autocorrelation vector needs at least lags 0 and n");
    std::int64_t n = static_cast<std::int64_t>(values_.size()) - 1;
    if (values_[0] != n)
        throw std::invalid_argument("lag-0 value must equal the sequence length");
    if (kind_ == CorrelationKind::aperiodic) {
        if (values_.back() != 0)
            throw std::invalid_argument("aperiodic vector must end with 0");
        for (std::int64_t k = 1; k < n; ++k) {
            std::int64_t v = values_[static_cast<std::size_t>(k)];
            if (v > n - k || v < -(n - k))
                throw std::invalid_argument("aperiodic lag " + std::to_string(k) +
                                            " exceeds the overlap bound");
        }
    } else {
        if (values_.back() != n)
            throw std::invalid_argument("periodic vector must end with n");
        for (std::int64_t k = 1; k < n; ++k) {
            std::int64_t v = values_[static_cast<std::size_t>(k)];
            if (v > n || v < -n)
                throw std::invalid_argument("periodic lag " + std::to_string(k) + " exceeds n");
            if (v != values_[static_cast<std::size_t>(n - k)])
                throw std::invalid_argument("periodic vector is not palindromic at lag " +
                                            std::to_string(k));
        }
    }
}

std::int64_t AutocorrVector::at(std::int64_t k) const {
    if (k < 0 || k > n()) throw std::out_of_range("lag out of range");
    return values_[static_cast<std::size_t>(k)];
}

AutocorrVector aperiodic_direct(const BinarySequence& a) {
    std::int64_t n = a.length();
    std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t k = 0; k < n; ++k) {
        std::int64_t sum = 0;
        for (std::int64_t i = 0; i < n - k; ++i) sum += a[i] * a[i + k];
        c[static_cast<std::size_t>(k)] = sum;
    }
    // c[n] stays 0 by convention.
    return AutocorrVector(CorrelationKind::aperiodic, std::move(c));
}

AutocorrVector periodic_direct(const BinarySequence& a) {
    std::int64_t n = a.length();
    std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t k = 0; k < n; ++k) {
        std::int64_t sum = 0;
        for (std::int64_t i = 0; i < n; ++i) sum += a[i] * a[(i + k) % n];
        c[static_cast<std::size_t>(k)] = sum;
    }
    c[static_cast<std::size_t>(n)] = n;
    return AutocorrVector(CorrelationKind::periodic, std::move(c));
}

double MeritFactor::value() const {
    if (!defined()) return std::numeric_limits<double>::infinity();
    return static_cast<double>(numerator) / static_cast<double>(denominator);
}

std::string MeritFactor::to_string() const {
    if (!defined()) return "undefined";
    return std::to_string(numerator) + "/" + std::to_string(denominator);
}

std::int64_t off_peak_energy(const AutocorrVector& c) {
    if (c.kind() != CorrelationKind::aperiodic)
        throw std::invalid_argument("off-peak energy expects an aperiodic vector");
    std::int64_t sum = 0;
    for (std::int64_t k = 1; k < c.n(); ++k) sum += c.at(k) * c.at(k);
    return sum;
}

MeritFactor merit_factor(const AutocorrVector& c) {
    if (c.kind() != CorrelationKind::aperiodic)
        throw std::invalid_argument("merit factor expects an aperiodic vector");
    std::int64_t n = c.n();
    return MeritFactor{n * n, 2 * off_peak_energy(c)};
}

std::int64_t peak_sidelobe_level(const AutocorrVector& c) {
    if (c.kind() != CorrelationKind::aperiodic)
        throw std::invalid_argument("peak sidelobe level expects an aperiodic vector");
    if (c.n() < 2) throw std::invalid_argument("peak sidelobe level needs n >= 2");
    std::int64_t psl = 0;
    for (std::int64_t k = 1; k < c.n(); ++k) {
        std::int64_t v = c.at(k);
        if (v < 0) v = -v;
        if (v > psl) psl = v;
    }
    return psl;
}

bool is_barker(const BinarySequence& a) {
    if (a.length() == 1) return true;
    return peak_sidelobe_level(aperiodic_direct(a)) <= 1;
}

}  // namespace runcorr
