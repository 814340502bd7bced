#include "runcorr/sequence.hpp"

#include <stdexcept>

namespace runcorr {

namespace {

[[noreturn]] void bad_char(char c, std::size_t pos) {
    throw std::invalid_argument("illegal character '" + std::string(1, c) +
                                "' at position " + std::to_string(pos + 1));
}

void check_length(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("sequence must be non-empty");
    if (n > kMaxLength)
        throw std::invalid_argument("sequence length " + std::to_string(n) +
                                    " exceeds the supported maximum " + std::to_string(kMaxLength));
}

}  // namespace

BinarySequence::BinarySequence(std::vector<std::int8_t> elements) : elems_(std::move(elements)) {
    check_length(static_cast<std::int64_t>(elems_.size()));
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] != 1 && elems_[i] != -1)
            throw std::invalid_argument("element at position " + std::to_string(i + 1) +
                                        " is not -1 or +1");
    }
}

BinarySequence BinarySequence::parse(std::string_view text, TextFormat format) {
    if (text.empty()) throw std::invalid_argument("empty sequence text");
    check_length(static_cast<std::int64_t>(text.size()));
    std::vector<std::int8_t> elems;
    elems.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (format == TextFormat::sign_chars) {
            if (c == '+') elems.push_back(1);
            else if (c == '-') elems.push_back(-1);
            else bad_char(c, i);
        } else {
            if (c == '1') elems.push_back(1);
            else if (c == '0') elems.push_back(-1);
            else bad_char(c, i);
        }
    }
    return BinarySequence(std::move(elems));
}

std::string BinarySequence::to_string(TextFormat format) const {
    std::string out;
    out.reserve(elems_.size());
    for (std::int8_t e : elems_) {
        if (format == TextFormat::sign_chars) out.push_back(e > 0 ? '+' : '-');
        else out.push_back(e > 0 ? '1' : '0');
    }
    return out;
}

RunLengthEncoding::RunLengthEncoding(std::int8_t sign, std::vector<std::int64_t> lengths)
    : first_sign(sign), runs(std::move(lengths)) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("first_sign must be -1 or +1");
    if (runs.empty()) throw std::invalid_argument("run length encoding must have at least one run");
    std::int64_t total = 0;
    for (std::size_t j = 0; j < runs.size(); ++j) {
        if (runs[j] < 1)
            throw std::invalid_argument("run " + std::to_string(j + 1) + " has non-positive length");
        total += runs[j];
    }
    check_length(total);
}

std::int64_t RunLengthEncoding::total_length() const {
    std::int64_t total = 0;
    for (std::int64_t r : runs) total += r;
    return total;
}

RunLengthEncoding RunLengthEncoding::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty run length encoding text");
    std::int8_t sign = 1;
    std::size_t pos = 0;
    if (text.size() >= 2 && text[1] == ':') {
        if (text[0] == '+') sign = 1;
        else if (text[0] == '-') sign = -1;
        else bad_char(text[0], 0);
        pos = 2;
    }
    std::vector<std::int64_t> runs;
    bool in_number = false;
    std::int64_t current = 0;
    for (std::size_t i = pos; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            current = current * 10 + (c - '0');
            if (current > kMaxLength)
                throw std::invalid_argument("run length exceeds the supported maximum");
            in_number = true;
        } else if (c == ',') {
            if (!in_number) throw std::invalid_argument("missing run length before position " +
                                                        std::to_string(i + 1));
            runs.push_back(current);
            current = 0;
            in_number = false;
        } else {
            bad_char(c, i);
        }
    }
    if (!in_number) throw std::invalid_argument("run length encoding ends without a run length");
    runs.push_back(current);
    return RunLengthEncoding(sign, std::move(runs));
}

std::string RunLengthEncoding::to_string() const {
    std::string out(first_sign > 0 ? "+:" : "-:");
    for (std::size_t j = 0; j < runs.size(); ++j) {
        if (j) out.push_back(',');
        out += std::to_string(runs[j]);
    }
    return out;
}

RunLengthEncoding to_rle(const BinarySequence& a) {
    std::vector<std::int64_t> runs;
    std::int64_t n = a.length();
    std::int64_t run_len = 1;
    for (std::int64_t i = 1; i < n; ++i) {
        if (a[i] == a[i - 1]) {
            ++run_len;
        } else {
            runs.push_back(run_len);
            run_len = 1;
        }
    }
    runs.push_back(run_len);
    return RunLengthEncoding(static_cast<std::int8_t>(a[0]), std::move(runs));
}

BinarySequence from_rle(const RunLengthEncoding& r) {
    std::vector<std::int8_t> elems;
    elems.reserve(static_cast<std::size_t>(r.total_length()));
    std::int8_t sign = r.first_sign;
    for (std::int64_t len : r.runs) {
        elems.insert(elems.end(), static_cast<std::size_t>(len), sign);
        sign = static_cast<std::int8_t>(-sign);
    }
    return BinarySequence(std::move(elems));
}

BinarySequence negate(const BinarySequence& a) {
    std::vector<std::int8_t> elems = a.elements();
    for (std::int8_t& e : elems) e = static_cast<std::int8_t>(-e);
    return BinarySequence(std::move(elems));
}

BinarySequence rotate_left(const BinarySequence& a, std::int64_t shift) {
    if (shift < 0) throw std::invalid_argument("rotation amount must be non-negative");
    std::int64_t n = a.length();
    std::int64_t s = shift % n;
    std::vector<std::int8_t> elems;
    elems.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        elems.push_back(static_cast<std::int8_t>(a[(i + s) % n]));
    return BinarySequence(std::move(elems));
}

BinarySequence alternate(const BinarySequence& a) {
    std::vector<std::int8_t> elems = a.elements();
    for (std::size_t i = 1; i < elems.size(); i += 2) elems[i] = static_cast<std::int8_t>(-elems[i]);
    return BinarySequence(std::move(elems));
}

BinarySequence repeat_elements(const BinarySequence& a, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("repetition count must be at least 1");
    check_length(a.length() * m);
    std::vector<std::int8_t> elems;
    elems.reserve(static_cast<std::size_t>(a.length() * m));
    for (std::int64_t i = 0; i < a.length(); ++i)
        elems.insert(elems.end(), static_cast<std::size_t>(m), static_cast<std::int8_t>(a[i]));
    return BinarySequence(std::move(elems));
}

}  // namespace runcorr
