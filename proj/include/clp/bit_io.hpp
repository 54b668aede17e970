#pragma once

#include "clp/bit_sequence.hpp"

#include <cstdint>

namespace clp {

/// Number of bits needed to write an integer in [0, count): ceil(log2(count)).
unsigned ceil_log2(std::uint64_t count);

/// Appends integers to a bit stream, most significant bit first.
class BitWriter {
public:
    void write(std::uint64_t value, unsigned width);
    void write_bit(bool b) { bits_.push_back(b); }
    void write_bits(const BitSequence& bits, std::size_t begin, std::size_t length) {
        bits_.append(bits, begin, length);
    }
    /// Truncated binary code for `value` in [0, alphabet): floor(log2 m) or
    /// one more bit, so the average cost is log2 m when symbols are uniform.
    void write_phased(std::uint64_t value, std::uint64_t alphabet);

    std::size_t size() const { return bits_.size(); }
    const BitSequence& bits() const { return bits_; }
    BitSequence take() { return std::move(bits_); }

private:
    BitSequence bits_;
};

/// Reads integers back; running off the end throws CorruptStream.
class BitReader {
public:
    explicit BitReader(const BitSequence& bits) : bits_(bits) {}

    std::uint64_t read(unsigned width);
    bool read_bit();
    std::uint64_t read_phased(std::uint64_t alphabet);
    BitSequence read_bits(std::size_t length);

    std::size_t position() const { return pos_; }
    std::size_t remaining() const { return bits_.size() - pos_; }

private:
    const BitSequence& bits_;
    std::size_t pos_ = 0;
};

} // namespace clp
