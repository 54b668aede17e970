#pragma once

// Container: a fixed 25-byte header followed by the payload, packed most
// significant bit first and zero-padded to a byte boundary.
//
//   offset size field
//   0      4    magic "CLP1"
//   4      1    version (1)
//   5      8    n, number of source symbols
//   13     2    distortion numerator
//   15     2    distortion denominator (> 0)
//   17     2    p numerator
//   19     2    p denominator (0xFFFF: p unknown)
//   21     2    ell (0 for the practical variant)
//   23     1    variant: 0 practical, 1 idealized
//   24     1    relation: 0 full-codelet, 1 prefix-wise
//
// Multi-byte fields are big-endian.

#include "clp/bit_sequence.hpp"
#include "clp/matching.hpp"
#include "clp/types.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace clp {

enum class Variant : std::uint8_t { Practical = 0, Idealized = 1 };

const char* to_string(Variant v);

inline constexpr std::size_t kHeaderSize = 25;
inline constexpr std::uint8_t kStreamVersion = 1;
inline constexpr std::uint16_t kUnknownP = 0xFFFF;

struct Header {
    std::array<char, 4> magic{'C', 'L', 'P', '1'};
    std::uint8_t version = kStreamVersion;
    std::uint64_t n = 0;
    std::uint16_t d_num = 0;
    std::uint16_t d_den = 1;
    std::uint16_t p_num = 1;
    std::uint16_t p_den = kUnknownP;
    std::uint16_t ell = 0;
    Variant variant = Variant::Practical;
    MatchRelation relation = MatchRelation::FullCodelet;

    DistortionBudget distortion() const { return {d_num, d_den}; }
    std::optional<SourceModel> source() const;
    void set_distortion(const DistortionBudget& d);
    void set_source(const std::optional<SourceModel>& src);

    std::array<std::uint8_t, kHeaderSize> to_bytes() const;
    /// Throws BadMagic, UnsupportedVersion or CorruptStream.
    static Header parse(std::span<const std::uint8_t> bytes);
};

struct EncodedStream {
    Header header;
    BitSequence payload;

    std::vector<std::uint8_t> to_bytes() const;
    /// Payload bit length becomes the padded byte length times 8.
    static EncodedStream parse(std::span<const std::uint8_t> bytes);
};

/// Payload bits per source symbol.
double coding_rate(const EncodedStream& stream);

} // namespace clp
