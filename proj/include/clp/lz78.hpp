#pragma once

// Binary LZ78.
//
// Layout of a non-empty code:
//   [partial flag : 1 bit]
//   records, for phrase j = 0, 1, ...:
//     [index : ceil(log2(j + 1)) bits][new bit : 1 bit]
// Index 0 is the empty phrase; phrase j adds dictionary entry j + 1. When
// the input ends inside a known phrase, the flag is 1 and the last record
// carries only the index of that phrase. Integers are written MSB first.
// The empty input encodes to the empty code.

#include "clp/bit_io.hpp"
#include "clp/bit_sequence.hpp"

#include <cstdint>
#include <vector>

namespace clp {

/// One LZ78 phrase as a [begin, begin + length) range of the input.
struct Lz78Phrase {
    std::size_t begin = 0;
    std::size_t length = 0;
};

/// Phrase boundaries of the LZ78 parse (the final partial phrase included).
std::vector<Lz78Phrase> lz78_parse(const BitSequence& y);

BitSequence lz78_encode(const BitSequence& y);

/// Inverse of lz78_encode; the code must be consumed exactly.
/// Throws CorruptStream on out-of-range indices or truncation.
BitSequence lz78_decode(const BitSequence& code);

/// Decodes exactly `length` symbols from `reader`, leaving trailing bits unread.
BitSequence lz78_decode(BitReader& reader, std::uint64_t length);

} // namespace clp
