#include "clp/bit_io.hpp"

#include "clp/errors.hpp"

#include <bit>

namespace clp {

unsigned ceil_log2(std::uint64_t count) {
    if (count <= 1) return 0;
    return 64u - static_cast<unsigned>(std::countl_zero(count - 1));
}

void BitWriter::write(std::uint64_t value, unsigned width) {
    for (unsigned i = width; i-- > 0;) bits_.push_back((value >> i) & 1u);
}

void BitWriter::write_phased(std::uint64_t value, std::uint64_t alphabet) {
    if (alphabet <= 1) return;
    const unsigned k = static_cast<unsigned>(std::bit_width(alphabet)) - 1;  // floor(log2 m)
    const std::uint64_t short_codes = (std::uint64_t{2} << k) - alphabet;
    if (value < short_codes)
        write(value, k);
    else
        write(value + short_codes, k + 1);
}

std::uint64_t BitReader::read(unsigned width) {
    if (width > remaining()) throw CorruptStream("truncated payload");
    std::uint64_t v = 0;
    for (unsigned i = 0; i < width; ++i) v = (v << 1) | (bits_[pos_++] ? 1u : 0u);
    return v;
}

bool BitReader::read_bit() { return read(1) != 0; }

std::uint64_t BitReader::read_phased(std::uint64_t alphabet) {
    if (alphabet <= 1) return 0;
    const unsigned k = static_cast<unsigned>(std::bit_width(alphabet)) - 1;
    const std::uint64_t short_codes = (std::uint64_t{2} << k) - alphabet;
    std::uint64_t v = read(k);
    if (v < short_codes) return v;
    v = (v << 1) | (read_bit() ? 1u : 0u);
    return v - short_codes;
}

BitSequence BitReader::read_bits(std::size_t length) {
    if (length > remaining()) throw CorruptStream("truncated payload");
    BitSequence out = bits_.slice(pos_, length);
    pos_ += length;
    return out;
}

} // namespace clp
