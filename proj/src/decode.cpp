#include "clp/codec.hpp"

#include "clp/errors.hpp"
#include "clp/lz78.hpp"

namespace clp {

namespace {

BitSequence decode_idealized(const EncodedStream& s) {
    const Header& h = s.header;
    LevelConfig cfg{h.ell, h.n, 0.01};
    IdealizedModel model(cfg, h.source(), h.distortion());
    BitReader reader(s.payload);
    BitSequence y;
    y.reserve(h.n);
    while (y.size() < h.n) {
        const std::uint64_t remaining = h.n - y.size();
        const std::size_t begin = y.size();
        NodeId used = kNoNode;
        if (remaining < h.ell) {
            y.append(reader.read_bits(remaining));
        } else {
            const std::uint64_t symbol = reader.read_phased(model.alphabet(remaining));
            if (symbol == 0) {
                y.append(reader.read_bits(h.ell));
            } else {
                used = model.codelet_of(symbol, remaining);
                const BitSequence c = model.dictionary().codelet(used);
                if (c.size() > remaining) throw CorruptStream("codelet runs past the declared length");
                y.append(c);
            }
        }
        model.after_phrase(y, begin, y.size() - begin, used);
    }
    if (reader.remaining() >= 8) throw CorruptStream("trailing data after the last phrase");
    return y;
}

} // namespace

BitSequence decode(const EncodedStream& s) {
    if (s.header.variant == Variant::Idealized) return decode_idealized(s);
    BitReader reader(s.payload);
    BitSequence y = lz78_decode(reader, s.header.n);
    if (reader.remaining() >= 8) throw CorruptStream("trailing data after the last phrase");
    return y;
}

BitSequence decode(std::span<const std::uint8_t> bytes) { return decode(EncodedStream::parse(bytes)); }

} // namespace clp
