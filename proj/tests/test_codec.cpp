#include "clp/codec.hpp"
#include "clp/errors.hpp"
#include "clp/lz78.hpp"
#include "clp/rd_math.hpp"
#include "clp/rng.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace clp;

namespace {

BitSequence bits(const char* s) { return BitSequence::from_string(s); }

BitSequence random_bits(std::size_t n, double p, CounterRng& rng) {
    BitSequence s;
    s.reserve(n);
    for (std::size_t i = 0; i < n; ++i) s.push_back(rng.uniform() < p);
    return s;
}

const DistortionBudget kZero(0, 1);
const DistortionBudget kHalf(1, 2);

std::vector<std::size_t> event_lengths(const std::vector<ParseEvent>& events) {
    std::vector<std::size_t> out;
    for (const auto& e : events) out.push_back(e.length);
    return out;
}

} // namespace

TEST(Lz78, EmptyAndSmallExample) {
    EXPECT_EQ(lz78_encode(BitSequence{}).size(), 0u);
    EXPECT_EQ(lz78_decode(BitSequence{}).size(), 0u);
    // Flag 0, then [new 0], [idx 0, new 1], [idx 01, new 1].
    EXPECT_EQ(lz78_encode(bits("0101")).to_string(), "0" "0" "01" "011");
    const auto phrases = lz78_parse(bits("0101"));
    ASSERT_EQ(phrases.size(), 3u);
    EXPECT_EQ(phrases[2].begin, 2u);
    EXPECT_EQ(phrases[2].length, 2u);
}

TEST(Lz78, PartialFinalPhrase) {
    // 0 | 1 | 0 -> the last phrase repeats "0" and carries only its index.
    const auto code = lz78_encode(bits("010"));
    EXPECT_EQ(code.to_string(), "1" "0" "01" "01");
    EXPECT_EQ(lz78_decode(code).to_string(), "010");
}

TEST(Lz78, RoundTripAndReferenceParse) {
    CounterRng rng(4);
    for (int t = 0; t < 300; ++t) {
        const auto n = rng.below(3000);
        const double p = t % 3 == 0 ? 0.5 : (t % 3 == 1 ? 0.1 : 0.9);
        const auto y = random_bits(n, p, rng);
        const auto code = lz78_encode(y);
        ASSERT_EQ(lz78_decode(code), y);
        std::vector<std::size_t> lens;
        for (const auto& ph : lz78_parse(y)) lens.push_back(ph.length);
        EXPECT_EQ(lens, oracle::lz78_phrase_lengths(y.to_string()));
    }
}

TEST(Lz78, CorruptInputsThrow) {
    CounterRng rng(6);
    const auto y = random_bits(500, 0.5, rng);
    const auto code = lz78_encode(y);
    EXPECT_THROW(lz78_decode(code.slice(0, code.size() - 3)), CorruptStream);
    // An index pointing past the dictionary: phrase 2 has a 2-bit index field.
    EXPECT_THROW(lz78_decode(bits("0" "0" "01" "111")), CorruptStream);
    BitReader reader(code);
    EXPECT_THROW(lz78_decode(reader, 600), CorruptStream);
}

TEST(SelectCodelet, EmptySingletonAndTies) {
    EXPECT_THROW(select_codelet({}, kHalf), EmptyMatchSet);
    std::vector<CodeletCandidate> one{{bits("01"), {1, 3}}};
    EXPECT_EQ(select_codelet(one, kHalf), 0u);
    // Worked example step 2: I_m(1/2, 2/3, 1/2) = I_m(1, 1/2, 1/2) = 0, longer wins.
    std::vector<CodeletCandidate> step2{{bits("1"), {1, 2}}, {bits("01"), {2, 3}}};
    EXPECT_NEAR(*lower_mutual_info(0.5, 2.0 / 3, 0.5), 0.0, 1e-12);
    EXPECT_NEAR(*lower_mutual_info(1.0, 0.5, 0.5), 0.0, 1e-12);
    EXPECT_EQ(select_codelet(step2, kHalf), 1u);
    // Same length: lexicographically smaller wins.
    std::vector<CodeletCandidate> same{{bits("11"), {1, 2}}, {bits("10"), {1, 2}}};
    EXPECT_EQ(select_codelet(same, kHalf), 1u);
    // Metric first: a feasible short codelet beats an infeasible long one.
    std::vector<CodeletCandidate> metric{{bits("111"), {0, 3}}, {bits("0"), {0, 1}}};
    EXPECT_EQ(select_codelet(metric, DistortionBudget(1, 10)), 1u);
}

TEST(Practical, WorkedExampleTrace) {
    const auto x = bits("0110101101000");
    PracticalEncoder enc(x, kHalf);
    const auto s1 = enc.step();
    EXPECT_EQ(s1.event.bits.to_string(), "0");
    std::set<std::string> c1;
    for (const auto& c : enc.tree().codelets()) c1.insert(c.to_string());
    EXPECT_EQ(c1, (std::set<std::string>{"00", "01", "1"}));
    const auto s2 = enc.step();
    EXPECT_EQ(s2.matches.size(), 2u);
    EXPECT_EQ(s2.event.bits.to_string(), "01");
    std::set<std::string> c2;
    for (const auto& c : enc.tree().codelets()) c2.insert(c.to_string());
    EXPECT_EQ(c2, (std::set<std::string>{"00", "010", "011", "1"}));
    EXPECT_EQ(enc.reconstruction().to_string(), "001");
    EXPECT_EQ(x.slice(enc.position(), x.size() - enc.position()).to_string(), "0101101000");
}

TEST(Practical, LosslessEqualsLz78Parse) {
    CounterRng rng(12);
    for (int t = 0; t < 50; ++t) {
        const auto x = random_bits(1 + rng.below(5000), t % 2 ? 0.5 : 0.2, rng);
        const auto r = encode_practical(x, kZero);
        EXPECT_EQ(r.y, x);
        EXPECT_EQ(event_lengths(r.events), oracle::lz78_phrase_lengths(x.to_string()));
    }
}

TEST(Practical, DistortionGuaranteeAndRoundTrip) {
    CounterRng rng(13);
    const std::uint32_t budgets[][2] = {{0, 1}, {1, 20}, {11, 100}, {1, 4}, {1, 2}};
    for (int t = 0; t < 200; ++t) {
        const auto& b = budgets[rng.below(5)];
        const DistortionBudget d(b[0], b[1]);
        const auto x = random_bits(1 + rng.below(3000), 0.5, rng);
        for (auto rel : {MatchRelation::FullCodelet, MatchRelation::PrefixWise}) {
            const auto r = encode_practical(x, d, std::nullopt, rel);
            ASSERT_EQ(r.y.size(), x.size());
            EXPECT_TRUE(d.allows(hamming_distance(x, r.y), x.size()));
            EXPECT_EQ(decode(r.stream.to_bytes()), r.y);
            for (const auto& e : r.events) EXPECT_EQ(e.bits.size(), e.length);
        }
    }
}

TEST(Idealized, LosslessReproducesInput) {
    CounterRng rng(14);
    for (unsigned ell : {1u, 2u, 3u}) {
        const auto x = random_bits(4000 + ell, 0.5, rng);
        const auto r = encode_idealized(x, kZero, SourceModel{}, LevelConfig{ell, x.size(), 0.01});
        EXPECT_EQ(r.y, x);
        EXPECT_EQ(decode(r.stream), x);
        for (auto m : r.stats.max_frontier) EXPECT_LE(m, 1u);
    }
}

TEST(Idealized, DistortionGuaranteeAndRoundTrip) {
    CounterRng rng(15);
    const std::uint32_t budgets[][2] = {{0, 1}, {1, 20}, {11, 100}, {1, 4}, {1, 2}};
    for (int t = 0; t < 150; ++t) {
        const auto& b = budgets[rng.below(5)];
        const DistortionBudget d(b[0], b[1]);
        const unsigned ell = 1 + static_cast<unsigned>(rng.below(4));
        const double p = t % 3 == 0 ? 0.5 : 0.3;
        const auto x = random_bits(1 + rng.below(4000), p, rng);
        std::optional<SourceModel> src;
        if (t % 2) src = SourceModel{{3, 10}};
        std::optional<std::uint64_t> tie;
        if (t % 5 == 0) tie = t;
        const auto r = encode_idealized(x, d, src, IdealizedOptions{LevelConfig{ell, x.size(), 0.01}, tie});
        ASSERT_EQ(r.y.size(), x.size());
        EXPECT_TRUE(d.allows(hamming_distance(x, r.y), x.size()));
        EXPECT_EQ(decode(r.stream.to_bytes()), r.y);
        std::size_t covered = 0;
        for (const auto& e : r.events) {
            if (e.kind == ParseEvent::Kind::Codelet)
                EXPECT_TRUE(matches_prefixwise(x.slice(covered, e.length), e.bits, d));
            else
                EXPECT_EQ(e.bits, x.slice(covered, e.length));
            covered += e.length;
        }
        EXPECT_EQ(covered, x.size());
        EXPECT_EQ(r.stats.phrases, r.events.size());
    }
}

TEST(Idealized, HorizonMustMatch) {
    const auto x = bits("01101");
    EXPECT_THROW(encode_idealized(x, kHalf, SourceModel{}, LevelConfig{2, 7, 0.01}), InvalidArgument);
    EXPECT_NO_THROW(encode_idealized(x, kHalf, SourceModel{}, LevelConfig{2, 0, 0.01}));
}

TEST(Idealized, ModelSymbolsInvert) {
    CounterRng rng(16);
    const auto x = random_bits(20000, 0.5, rng);
    IdealizedEncoder enc(x, DistortionBudget(1, 8), SourceModel{}, IdealizedOptions{LevelConfig{2, x.size(), 0.01}, {}});
    enc.run();
    const auto& model = enc.model();
    const auto& dict = model.dictionary();
    for (std::uint64_t remaining : {std::uint64_t{3}, std::uint64_t{1000}}) {
        const auto alphabet = model.alphabet(remaining);
        for (std::uint64_t s = 1; s < alphabet; ++s) {
            const NodeId v = model.codelet_of(s, remaining);
            EXPECT_EQ(model.symbol_of(v, remaining), s);
        }
        EXPECT_THROW(model.codelet_of(0, remaining), CorruptStream);
        EXPECT_THROW(model.codelet_of(alphabet, remaining), CorruptStream);
    }
    EXPECT_LE(dict.active_count(), dict.live_count());
}

TEST(Stream, HeaderLayoutAndErrors) {
    const auto x = bits("0110101101000");
    auto r = encode_practical(x, kHalf, SourceModel{{1, 2}});
    auto bytes = r.stream.to_bytes();
    ASSERT_GE(bytes.size(), kHeaderSize);
    EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "CLP1");
    EXPECT_EQ(bytes[4], kStreamVersion);
    EXPECT_EQ(bytes[12], 13);  // n, big-endian
    const auto h = Header::parse(bytes);
    EXPECT_EQ(h.n, 13u);
    EXPECT_EQ(h.distortion(), kHalf);
    ASSERT_TRUE(h.source().has_value());
    EXPECT_EQ(h.source()->p, (Rational{1, 2}));

    auto bad = bytes;
    bad[0] = 'X';
    EXPECT_THROW(decode(bad), BadMagic);
    bad = bytes;
    bad[4] = 9;
    EXPECT_THROW(decode(bad), UnsupportedVersion);
    bad = bytes;
    bad[15] = bad[16] = 0;  // zero distortion denominator
    EXPECT_THROW(decode(bad), CorruptStream);
    EXPECT_THROW(decode(std::span(bytes).first(10)), CorruptStream);
}

TEST(Stream, UnknownSourceSentinel) {
    const auto r = encode_practical(bits("0110"), kZero);
    const auto bytes = r.stream.to_bytes();
    EXPECT_EQ(bytes[19], 0xFF);
    EXPECT_EQ(bytes[20], 0xFF);
    EXPECT_FALSE(Header::parse(bytes).source().has_value());
}

TEST(Stream, LengthMismatchIsCorrupt) {
    CounterRng rng(19);
    const auto x = random_bits(3000, 0.5, rng);
    for (int variant = 0; variant < 2; ++variant) {
        EncodedStream s = variant == 0 ? encode_practical(x, DistortionBudget(1, 10)).stream
                                       : encode_idealized(x, DistortionBudget(1, 10), SourceModel{},
                                                          LevelConfig{2, x.size(), 0.01})
                                             .stream;
        auto longer = s;
        longer.header.n += 500;
        EXPECT_THROW(decode(longer.to_bytes()), CorruptStream);
        auto shorter = s;
        shorter.header.n -= 1000;
        EXPECT_THROW(decode(shorter.to_bytes()), CorruptStream);
    }
}

TEST(Stream, DeterministicBytes) {
    CounterRng rng(20);
    const auto x = random_bits(5000, 0.5, rng);
    const auto a = encode_idealized(x, DistortionBudget(11, 100), SourceModel{}, LevelConfig{3, x.size(), 0.01});
    const auto b = encode_idealized(x, DistortionBudget(11, 100), SourceModel{}, LevelConfig{3, x.size(), 0.01});
    EXPECT_EQ(a.stream.to_bytes(), b.stream.to_bytes());
    EXPECT_EQ(encode_practical(x, kHalf).stream.to_bytes(), encode_practical(x, kHalf).stream.to_bytes());
}

TEST(CodingRate, ConstantAndUniformSources) {
    const std::size_t n = 1u << 16;
    const BitSequence zeros(n, false);
    // Phrases 0, 00, 000, ...: record j costs ceil(log2(j + 1)) index bits plus a new bit.
    const auto lens = oracle::lz78_phrase_lengths(std::string(n, '0'));
    std::size_t want = 1, covered = 0;
    for (std::size_t j = 0; j < lens.size(); ++j) {
        unsigned w = 0;
        while ((std::size_t{1} << w) < j + 1) ++w;
        covered += lens[j];
        want += w + (lens[j] == j + 1 ? 1 : 0);
    }
    EXPECT_EQ(covered, n);
    const auto r0 = encode_practical(zeros, kZero);
    EXPECT_EQ(r0.stream.payload.size(), want);
    EXPECT_NEAR(coding_rate(r0.stream), static_cast<double>(want) / n, 1e-12);
    const auto ri = encode_idealized(zeros, kZero, SourceModel{{0, 1}}, LevelConfig{2, zeros.size(), 0.01});
    EXPECT_LT(coding_rate(ri.stream), coding_rate(r0.stream));
    CounterRng rng(21);
    const auto x = random_bits(n, 0.5, rng);
    EXPECT_GT(coding_rate(encode_practical(x, kZero).stream), 1.0);
    EncodedStream empty;
    EXPECT_THROW(coding_rate(empty), InvalidArgument);
}
