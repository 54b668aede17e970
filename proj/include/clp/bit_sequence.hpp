#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clp {

/// Packed binary string. Symbol i lives in word i / 64 at bit i % 64
/// (little-endian within the word). Unused high bits of the last word are
/// kept zero so that word-wise comparisons and popcounts stay valid.
class BitSequence {
public:
    BitSequence() = default;
    explicit BitSequence(std::size_t length, bool value = false);

    /// Parses a string of '0' / '1' characters.
    static BitSequence from_string(std::string_view bits);

    /// Bytes read most-significant bit first; `length` truncates (defaults to all bits).
    static BitSequence from_bytes(std::span<const std::uint8_t> bytes,
                                  std::size_t length = SIZE_MAX);

    std::string to_string() const;
    std::vector<std::uint8_t> to_bytes() const;

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool operator[](std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    bool at(std::size_t i) const;
    void set(std::size_t i, bool v);

    void push_back(bool v);
    void append(const BitSequence& other);
    void append(const BitSequence& other, std::size_t begin, std::size_t length);
    /// Appends the low `width` bits of `value`, lowest bit first.
    void append_word(std::uint64_t value, unsigned width);
    void clear();
    void reserve(std::size_t bits) { words_.reserve((bits + 63) / 64); }

    BitSequence slice(std::size_t begin, std::size_t length) const;

    /// Bits [pos, pos + width) packed with bit `pos` in the lowest position;
    /// width <= 64 and the range must be in bounds.
    std::uint64_t window(std::size_t pos, unsigned width) const;

    std::uint64_t count_ones() const;
    std::uint64_t count_ones(std::size_t begin, std::size_t length) const;

    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const BitSequence& a, const BitSequence& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }
    /// Lexicographic by symbol, shorter prefix first.
    friend bool operator<(const BitSequence& a, const BitSequence& b);

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

/// Hamming distance between equal-length sequences; throws LengthMismatch.
std::uint64_t hamming_distance(const BitSequence& x, const BitSequence& y);

/// Hamming distance between x[xpos, xpos+len) and y[ypos, ypos+len).
std::uint64_t hamming_distance(const BitSequence& x, std::size_t xpos,
                               const BitSequence& y, std::size_t ypos, std::size_t len);

} // namespace clp
