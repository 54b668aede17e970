#include "clp/lz78.hpp"

#include "clp/errors.hpp"

#include <algorithm>
#include <array>

namespace clp {

namespace {

// Dictionary trie used by the encoder; entry e is node e.
class PhraseTrie {
public:
    PhraseTrie() { child_.push_back({kNone, kNone}); }

    std::uint32_t child(std::uint32_t v, bool b) const { return child_[v][b ? 1 : 0]; }
    std::uint32_t add(std::uint32_t v, bool b) {
        const auto id = static_cast<std::uint32_t>(child_.size());
        child_.push_back({kNone, kNone});
        child_[v][b ? 1 : 0] = id;
        return id;
    }

    static constexpr std::uint32_t kNone = UINT32_MAX;

private:
    std::vector<std::array<std::uint32_t, 2>> child_;
};

// Decoder-side dictionary: entry e = entry parent[e] followed by bit[e].
class PhraseTable {
public:
    PhraseTable() {
        parent_.push_back(0);
        bit_.push_back(false);
        length_.push_back(0);
    }

    std::size_t size() const { return parent_.size(); }

    void emit(std::uint32_t e, BitSequence& out, std::vector<bool>& scratch) const {
        scratch.clear();
        for (std::uint32_t v = e; v != 0; v = parent_[v]) scratch.push_back(bit_[v]);
        for (auto it = scratch.rbegin(); it != scratch.rend(); ++it) out.push_back(*it);
    }

    std::uint64_t length(std::uint32_t e) const { return length_[e]; }

    void add(std::uint32_t parent, bool b) {
        parent_.push_back(parent);
        bit_.push_back(b);
        length_.push_back(length_[parent] + 1);
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<bool> bit_;
    std::vector<std::uint64_t> length_;
};

} // namespace

std::vector<Lz78Phrase> lz78_parse(const BitSequence& y) {
    std::vector<Lz78Phrase> out;
    PhraseTrie trie;
    std::uint32_t cur = 0;
    std::size_t begin = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const std::uint32_t next = trie.child(cur, y[i]);
        if (next != PhraseTrie::kNone) {
            cur = next;
            continue;
        }
        trie.add(cur, y[i]);
        out.push_back({begin, i + 1 - begin});
        begin = i + 1;
        cur = 0;
    }
    if (begin < y.size()) out.push_back({begin, y.size() - begin});
    return out;
}

BitSequence lz78_encode(const BitSequence& y) {
    if (y.empty()) return {};
    BitWriter records;
    PhraseTrie trie;
    std::uint32_t cur = 0;
    std::uint64_t phrase = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const std::uint32_t next = trie.child(cur, y[i]);
        if (next != PhraseTrie::kNone) {
            cur = next;
            continue;
        }
        records.write(cur, ceil_log2(phrase + 1));
        records.write_bit(y[i]);
        trie.add(cur, y[i]);
        ++phrase;
        cur = 0;
    }
    const bool partial = cur != 0;
    if (partial) records.write(cur, ceil_log2(phrase + 1));

    BitSequence out;
    out.reserve(records.size() + 1);
    out.push_back(partial);
    out.append(records.bits());
    return out;
}

BitSequence lz78_decode(BitReader& reader, std::uint64_t length) {
    BitSequence out;
    if (length == 0) return out;
    out.reserve(length);
    const bool partial = reader.read_bit();
    PhraseTable table;
    std::vector<bool> scratch;
    bool ended_partial = false;
    while (out.size() < length) {
        const std::uint64_t phrase = table.size() - 1;
        const std::uint64_t index = reader.read(ceil_log2(phrase + 1));
        if (index >= table.size()) throw CorruptStream("LZ78 index out of range");
        const auto e = static_cast<std::uint32_t>(index);
        const std::uint64_t left = length - out.size();
        if (table.length(e) + 1 > left) {
            if (!partial || table.length(e) != left || e == 0)
                throw CorruptStream("LZ78 phrase overruns the declared length");
            table.emit(e, out, scratch);
            ended_partial = true;
            break;
        }
        const bool b = reader.read_bit();
        table.emit(e, out, scratch);
        out.push_back(b);
        table.add(e, b);
    }
    if (partial != ended_partial) throw CorruptStream("LZ78 partial flag disagrees with the phrases");
    return out;
}

BitSequence lz78_decode(const BitSequence& code) {
    BitSequence out;
    if (code.empty()) return out;
    BitReader reader(code);
    const bool partial = reader.read_bit();
    PhraseTable table;
    std::vector<bool> scratch;
    while (reader.remaining() > 0) {
        const std::uint64_t phrase = table.size() - 1;
        const unsigned width = ceil_log2(phrase + 1);
        const std::uint64_t index = reader.read(width);
        if (index >= table.size()) throw CorruptStream("LZ78 index out of range");
        const auto e = static_cast<std::uint32_t>(index);
        if (reader.remaining() == 0 && partial) {
            if (e == 0) throw CorruptStream("LZ78 partial phrase refers to the empty entry");
            table.emit(e, out, scratch);
            return out;
        }
        const bool b = reader.read_bit();
        table.emit(e, out, scratch);
        out.push_back(b);
        table.add(e, b);
    }
    if (partial) throw CorruptStream("LZ78 code ends without its partial phrase");
    return out;
}

} // namespace clp
