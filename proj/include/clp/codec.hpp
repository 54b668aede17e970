#pragma once

#include "clp/bit_io.hpp"
#include "clp/bit_sequence.hpp"
#include "clp/codebook_tree.hpp"
#include "clp/level_dictionary.hpp"
#include "clp/matching.hpp"
#include "clp/stream.hpp"
#include "clp/types.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace clp {

/// One phrase of the parse. For a Codelet event `bits` is the chosen codelet
/// (the reconstruction of the phrase); for an Escape it is the raw source phrase.
struct ParseEvent {
    enum class Kind : std::uint8_t { Codelet, Escape };

    Kind kind = Kind::Codelet;
    BitSequence bits;
    std::size_t length = 0;
};

struct EncodeResult {
    BitSequence y;
    EncodedStream stream;
    std::vector<ParseEvent> events;
};

// ---------------------------------------------------------------------------
// Practical variant

/// A matching codelet together with the type of the source prefix that
/// would be parsed if it were chosen.
struct CodeletCandidate {
    BitSequence codelet;
    TypeFraction parsed;
};

/// Index of the candidate minimizing I_m(type(codelet), type(parsed), D);
/// infeasible pairs count as +infinity. Ties go to the longer codelet, then
/// to the lexicographically smaller one. Throws EmptyMatchSet.
std::size_t select_codelet(std::span<const CodeletCandidate> candidates, const DistortionBudget& dist);

/// Trace of one parsing step, exposed for inspection and tests.
struct PracticalStep {
    std::size_t begin = 0;
    std::vector<LeafMatch> matches;
    ParseEvent event;
};

class PracticalEncoder {
public:
    PracticalEncoder(const BitSequence& x, DistortionBudget dist,
                     MatchRelation rel = MatchRelation::FullCodelet);

    bool done() const { return pos_ >= x_.size(); }
    PracticalStep step();
    void run();

    std::size_t position() const { return pos_; }
    const CodebookTree& tree() const { return tree_; }
    const BitSequence& reconstruction() const { return y_; }
    const std::vector<ParseEvent>& events() const { return events_; }

private:
    const BitSequence& x_;
    DistortionBudget dist_;
    MatchRelation rel_;
    CodebookTree tree_;
    BitSequence y_;
    std::vector<ParseEvent> events_;
    std::size_t pos_ = 0;
    std::uint64_t parsed_ones_ = 0;
};

/// Parses x into codelets, then codes the reconstruction with LZ78.
/// `src` is only recorded in the header; the practical parse never uses it.
EncodeResult encode_practical(const BitSequence& x, const DistortionBudget& dist,
                              const std::optional<SourceModel>& src = std::nullopt,
                              MatchRelation rel = MatchRelation::FullCodelet);

// ---------------------------------------------------------------------------
// Idealized variant

struct IdealizedOptions {
    LevelConfig level;
    /// When set, ties between equally deep matches are broken uniformly at
    /// random from this seed instead of by creation order.
    std::optional<std::uint64_t> tie_seed;
};

struct IdealizedStats {
    std::uint64_t phrases = 0;
    std::uint64_t escapes = 0;
    std::uint64_t give_ups = 0;
    std::uint64_t node_visits = 0;
    /// Largest |Z_{k ell}| seen over all searches, index 0 = level 1.
    std::vector<std::size_t> max_frontier;
    /// Live codelets per level at the end (index 0 unused).
    std::vector<std::uint64_t> live_per_level;
    /// Whether some frontier ever exceeded (k ell)^4 / delta.
    bool frontier_bound_exceeded() const { return give_ups > 0; }
};

struct IdealizedResult : EncodeResult {
    IdealizedStats stats;
};

/// Dictionary state shared by the idealized encoder and decoder. The
/// codelet used for a phrase is promoted with the leading ell bits of the
/// next phrase, a decoder-visible extension that also matches the source
/// (the prefix-wise relation is closed under concatenation). An escaped
/// block joins level 1 while it has room.
///
/// Phrase records: a truncated binary symbol over {escape} + addressable
/// live codelets, then ell raw bits for an escape. While at least
/// max_live_depth + ell symbols remain, saturated codelets are not
/// addressable. A final tail shorter than ell is sent raw with no symbol.
class IdealizedModel {
public:
    IdealizedModel(const LevelConfig& cfg, const std::optional<SourceModel>& src,
                   const DistortionBudget& dist);

    const LevelDictionary& dictionary() const { return dict_; }
    LevelDictionary& dictionary() { return dict_; }

    bool exclusion(std::uint64_t remaining) const;
    std::uint64_t alphabet(std::uint64_t remaining) const;
    std::uint64_t symbol_of(NodeId codelet, std::uint64_t remaining) const;
    NodeId codelet_of(std::uint64_t symbol, std::uint64_t remaining) const;

    /// Applies the dictionary update for a finished phrase y[begin, begin+length).
    /// `codelet` is the node used, or kNoNode for an escape.
    void after_phrase(const BitSequence& y, std::size_t begin, std::size_t length, NodeId codelet);

    /// Current p: the known value, or the estimate tau(y)(1 - 2D) + D.
    double p() const { return dict_.sizes().p(); }

private:
    void refresh_estimate();

    unsigned ell_;
    DistortionBudget dist_;
    bool known_p_;
    LevelDictionary dict_;
    NodeId previous_ = kNoNode;
    std::uint64_t y_ones_ = 0;
    std::uint64_t y_length_ = 0;
};

class IdealizedEncoder {
public:
    IdealizedEncoder(const BitSequence& x, const DistortionBudget& dist,
                     const std::optional<SourceModel>& src, const IdealizedOptions& opts);

    bool done() const { return pos_ >= x_.size(); }
    /// Parses one phrase; returns its event.
    const ParseEvent& step();
    void run();

    std::size_t position() const { return pos_; }
    const IdealizedModel& model() const { return model_; }
    const LevelDictionary& dictionary() const { return model_.dictionary(); }
    const BitSequence& reconstruction() const { return y_; }
    const std::vector<ParseEvent>& events() const { return events_; }
    const IdealizedStats& stats() const { return stats_; }
    const BitSequence& payload() const { return writer_.bits(); }

    IdealizedResult finish() &&;

private:
    const BitSequence& x_;
    DistortionBudget dist_;
    std::optional<SourceModel> src_;
    IdealizedOptions opts_;
    IdealizedModel model_;
    BitWriter writer_;
    BitSequence y_;
    std::vector<ParseEvent> events_;
    IdealizedStats stats_;
    std::size_t pos_ = 0;
    std::uint64_t tie_counter_ = 0;
};

IdealizedResult encode_idealized(const BitSequence& x, const DistortionBudget& dist,
                                 const std::optional<SourceModel>& src, const IdealizedOptions& opts);
IdealizedResult encode_idealized(const BitSequence& x, const DistortionBudget& dist,
                                 const std::optional<SourceModel>& src, const LevelConfig& cfg);

// ---------------------------------------------------------------------------

/// Reconstruction carried by a stream (either variant). Throws
/// CorruptStream, BadMagic or UnsupportedVersion.
BitSequence decode(const EncodedStream& stream);
BitSequence decode(std::span<const std::uint8_t> bytes);

} // namespace clp
