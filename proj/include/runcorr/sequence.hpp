#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace runcorr {

// Hard cap on sequence length. All correlation arithmetic stays in plain
// int64: |C_k| <= n and the reconstruction partial sums are bounded by n^2,
// so nothing overflows for n <= 2^20.
inline constexpr std::int64_t kMaxLength = std::int64_t{1} << 20;

enum class TextFormat { sign_chars, bit_chars };

// Finite sequence over {-1,+1}, immutable after construction.
class BinarySequence {
public:
    explicit BinarySequence(std::vector<std::int8_t> elements);

    // sign_chars: '+' / '-'.  bit_chars: '1' -> +1, '0' -> -1.
    static BinarySequence parse(std::string_view text, TextFormat format);

    std::int64_t length() const { return static_cast<std::int64_t>(elems_.size()); }

    // 0-based element access; values are exactly -1 or +1.
    int operator[](std::int64_t i) const { return elems_[static_cast<std::size_t>(i)]; }

    const std::vector<std::int8_t>& elements() const { return elems_; }

    std::string to_string(TextFormat format = TextFormat::sign_chars) const;

    friend bool operator==(const BinarySequence&, const BinarySequence&) = default;

private:
    std::vector<std::int8_t> elems_;
};

// Run lengths plus the sign of the first run. The lengths alone determine a
// sequence only up to global negation; first_sign pins down which of the two.
struct RunLengthEncoding {
    std::int8_t first_sign = 1;
    std::vector<std::int64_t> runs;

    RunLengthEncoding(std::int8_t first_sign, std::vector<std::int64_t> runs);

    std::int64_t gamma() const { return static_cast<std::int64_t>(runs.size()); }
    std::int64_t total_length() const;

    // Text form "+:7,3,3" or "-:1,4"; a missing sign prefix means '+'.
    static RunLengthEncoding parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const RunLengthEncoding&, const RunLengthEncoding&) = default;
};

RunLengthEncoding to_rle(const BinarySequence& a);
BinarySequence from_rle(const RunLengthEncoding& r);

BinarySequence negate(const BinarySequence& a);

// Cyclic left shift: element i of the result is a[(i + shift) mod n].
BinarySequence rotate_left(const BinarySequence& a, std::int64_t shift);

// Flip every second element (the even positions, counting from 1).
BinarySequence alternate(const BinarySequence& a);

// Repeat each element m times; the result's run lengths are m times a's.
BinarySequence repeat_elements(const BinarySequence& a, std::int64_t m);

}  // namespace runcorr
