#include "clp/stream.hpp"

#include "clp/errors.hpp"

#include <algorithm>

namespace clp {

const char* to_string(Variant v) { return v == Variant::Practical ? "practical" : "idealized"; }

namespace {

template <typename T>
void put_be(std::uint8_t* out, T value) {
    for (std::size_t i = 0; i < sizeof(T); ++i)
        out[i] = static_cast<std::uint8_t>(value >> (8 * (sizeof(T) - 1 - i)));
}

template <typename T>
T get_be(const std::uint8_t* in) {
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v = static_cast<T>((v << 8) | in[i]);
    return v;
}

std::uint16_t narrow16(std::uint32_t v, const char* what) {
    if (v > 0xFFFF) throw InvalidArgument(std::string(what) + " does not fit the 16-bit header field");
    return static_cast<std::uint16_t>(v);
}

} // namespace

std::optional<SourceModel> Header::source() const {
    if (p_den == kUnknownP) return std::nullopt;
    return SourceModel{{p_num, p_den}};
}

void Header::set_distortion(const DistortionBudget& d) {
    d_num = narrow16(d.num, "distortion numerator");
    d_den = narrow16(d.den, "distortion denominator");
}

void Header::set_source(const std::optional<SourceModel>& src) {
    if (!src) {
        p_num = 1;
        p_den = kUnknownP;
        return;
    }
    if (src->p.den == kUnknownP) throw InvalidArgument("p denominator 65535 is reserved");
    p_num = narrow16(src->p.num, "p numerator");
    p_den = narrow16(src->p.den, "p denominator");
}

std::array<std::uint8_t, kHeaderSize> Header::to_bytes() const {
    std::array<std::uint8_t, kHeaderSize> b{};
    std::copy(magic.begin(), magic.end(), b.begin());
    b[4] = version;
    put_be(&b[5], n);
    put_be(&b[13], d_num);
    put_be(&b[15], d_den);
    put_be(&b[17], p_num);
    put_be(&b[19], p_den);
    put_be(&b[21], ell);
    b[23] = static_cast<std::uint8_t>(variant);
    b[24] = static_cast<std::uint8_t>(relation);
    return b;
}

Header Header::parse(std::span<const std::uint8_t> b) {
    if (b.size() < 4 || !std::equal(b.begin(), b.begin() + 4, "CLP1")) throw BadMagic();
    if (b.size() < kHeaderSize) throw CorruptStream("truncated header");
    Header h;
    h.version = b[4];
    if (h.version != kStreamVersion) throw UnsupportedVersion(h.version);
    h.n = get_be<std::uint64_t>(&b[5]);
    h.d_num = get_be<std::uint16_t>(&b[13]);
    h.d_den = get_be<std::uint16_t>(&b[15]);
    h.p_num = get_be<std::uint16_t>(&b[17]);
    h.p_den = get_be<std::uint16_t>(&b[19]);
    h.ell = get_be<std::uint16_t>(&b[21]);
    if (h.d_den == 0 || 2u * h.d_num > h.d_den) throw CorruptStream("invalid distortion field");
    if (h.p_den == 0 || (h.p_den != kUnknownP && h.p_num > h.p_den))
        throw CorruptStream("invalid source field");
    if (b[23] > 1) throw CorruptStream("unknown variant");
    if (b[24] > 1) throw CorruptStream("unknown match relation");
    h.variant = static_cast<Variant>(b[23]);
    h.relation = static_cast<MatchRelation>(b[24]);
    if (h.variant == Variant::Idealized && (h.ell == 0 || h.ell > 16))
        throw CorruptStream("invalid block width");
    return h;
}

std::vector<std::uint8_t> EncodedStream::to_bytes() const {
    const auto head = header.to_bytes();
    std::vector<std::uint8_t> out(head.begin(), head.end());
    const auto body = payload.to_bytes();
    out.insert(out.end(), body.begin(), body.end());
    return out;
}

EncodedStream EncodedStream::parse(std::span<const std::uint8_t> bytes) {
    EncodedStream s;
    s.header = Header::parse(bytes);
    s.payload = BitSequence::from_bytes(bytes.subspan(kHeaderSize));
    return s;
}

double coding_rate(const EncodedStream& stream) {
    if (stream.header.n == 0) throw InvalidArgument("coding rate of an empty source");
    return static_cast<double>(stream.payload.size()) / static_cast<double>(stream.header.n);
}

} // namespace clp
