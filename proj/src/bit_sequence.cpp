#include "clp/bit_sequence.hpp"

#include "clp/errors.hpp"

#include <algorithm>
#include <bit>

namespace clp {

namespace {

constexpr std::uint64_t low_mask(unsigned width) {
    return width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
}

} // namespace

BitSequence::BitSequence(std::size_t length, bool value)
    : words_((length + 63) / 64, value ? ~std::uint64_t{0} : 0), size_(length) {
    if (value && (size_ & 63)) words_.back() &= low_mask(size_ & 63);
}

BitSequence BitSequence::from_string(std::string_view bits) {
    BitSequence out;
    out.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') throw InvalidArgument("bit strings may only contain '0' and '1'");
        out.push_back(c == '1');
    }
    return out;
}

BitSequence BitSequence::from_bytes(std::span<const std::uint8_t> bytes, std::size_t length) {
    const std::size_t total = bytes.size() * 8;
    if (length == SIZE_MAX) length = total;
    if (length > total) throw InvalidArgument("requested more bits than the input holds");
    BitSequence out(length);
    for (std::size_t i = 0; i < length; ++i)
        if ((bytes[i >> 3] >> (7 - (i & 7))) & 1u) out.set(i, true);
    return out;
}

std::string BitSequence::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if ((*this)[i]) s[i] = '1';
    return s;
}

std::vector<std::uint8_t> BitSequence::to_bytes() const {
    std::vector<std::uint8_t> out((size_ + 7) / 8, 0);
    for (std::size_t i = 0; i < size_; ++i)
        if ((*this)[i]) out[i >> 3] |= static_cast<std::uint8_t>(0x80u >> (i & 7));
    return out;
}

bool BitSequence::at(std::size_t i) const {
    if (i >= size_) throw std::out_of_range("BitSequence::at");
    return (*this)[i];
}

void BitSequence::set(std::size_t i, bool v) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (v)
        words_[i >> 6] |= bit;
    else
        words_[i >> 6] &= ~bit;
}

void BitSequence::push_back(bool v) {
    if ((size_ & 63) == 0) words_.push_back(0);
    ++size_;
    if (v) set(size_ - 1, true);
}

void BitSequence::append_word(std::uint64_t value, unsigned width) {
    if (width == 0) return;
    value &= low_mask(width);
    const unsigned offset = size_ & 63;
    if (offset == 0) {
        words_.push_back(value);
    } else {
        words_.back() |= value << offset;
        if (offset + width > 64) words_.push_back(value >> (64 - offset));
    }
    size_ += width;
}

void BitSequence::append(const BitSequence& other) { append(other, 0, other.size_); }

void BitSequence::append(const BitSequence& other, std::size_t begin, std::size_t length) {
    if (begin + length > other.size_) throw std::out_of_range("BitSequence::append");
    reserve(size_ + length);
    while (length >= 64) {
        append_word(other.window(begin, 64), 64);
        begin += 64;
        length -= 64;
    }
    if (length) append_word(other.window(begin, static_cast<unsigned>(length)),
                            static_cast<unsigned>(length));
}

void BitSequence::clear() {
    words_.clear();
    size_ = 0;
}

BitSequence BitSequence::slice(std::size_t begin, std::size_t length) const {
    BitSequence out;
    out.append(*this, begin, length);
    return out;
}

std::uint64_t BitSequence::window(std::size_t pos, unsigned width) const {
    if (width == 0) return 0;
    const std::size_t w = pos >> 6;
    const unsigned off = pos & 63;
    std::uint64_t v = words_[w] >> off;
    if (off + width > 64) v |= words_[w + 1] << (64 - off);
    return v & low_mask(width);
}

std::uint64_t BitSequence::count_ones() const {
    std::uint64_t c = 0;
    for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
}

std::uint64_t BitSequence::count_ones(std::size_t begin, std::size_t length) const {
    std::uint64_t c = 0;
    while (length >= 64) {
        c += static_cast<std::uint64_t>(std::popcount(window(begin, 64)));
        begin += 64;
        length -= 64;
    }
    if (length) c += static_cast<std::uint64_t>(
        std::popcount(window(begin, static_cast<unsigned>(length))));
    return c;
}

bool operator<(const BitSequence& a, const BitSequence& b) {
    const std::size_t n = std::min(a.size_, b.size_);
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return b[i];
    return a.size_ < b.size_;
}

std::uint64_t hamming_distance(const BitSequence& x, const BitSequence& y) {
    if (x.size() != y.size()) throw LengthMismatch(x.size(), y.size());
    std::uint64_t d = 0;
    auto xw = x.words();
    auto yw = y.words();
    for (std::size_t i = 0; i < xw.size(); ++i)
        d += static_cast<std::uint64_t>(std::popcount(xw[i] ^ yw[i]));
    return d;
}

std::uint64_t hamming_distance(const BitSequence& x, std::size_t xpos,
                               const BitSequence& y, std::size_t ypos, std::size_t len) {
    if (xpos + len > x.size() || ypos + len > y.size())
        throw std::out_of_range("hamming_distance range");
    std::uint64_t d = 0;
    while (len >= 64) {
        d += static_cast<std::uint64_t>(std::popcount(x.window(xpos, 64) ^ y.window(ypos, 64)));
        xpos += 64;
        ypos += 64;
        len -= 64;
    }
    if (len) {
        const auto w = static_cast<unsigned>(len);
        d += static_cast<std::uint64_t>(std::popcount(x.window(xpos, w) ^ y.window(ypos, w)));
    }
    return d;
}

} // namespace clp
