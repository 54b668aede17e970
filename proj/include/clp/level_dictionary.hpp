#pragma once

// Idealized-variant dictionary. Codelets live at depths that are multiples
// of the block width ell. Level k holds the live codelets of depth k*ell,
// at most min(M_{k ell}, cap_{k-1} * 2^ell) of them, where
// M_L = ceil(L^2 / p_L) and p_L is the prefix-wise match probability of a
// canonical length-L string of the optimal reproduction type.
//
// Every depth-ell string is a candidate from the start. A live codelet that
// gets promoted exposes all 2^ell of its ell-bit extensions as candidates;
// the extension actually met while parsing becomes live. Live sets are
// filled in order of use, never by an offline selection pass.

#include "clp/bit_sequence.hpp"
#include "clp/fenwick.hpp"
#include "clp/codebook_tree.hpp"
#include "clp/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace clp {

struct LevelConfig {
    unsigned ell = 2;
    std::uint64_t horizon_n = 0;
    double delta = 0.01;

    /// max(2, ceil(log2 log2 n))
    static unsigned default_ell(std::uint64_t n);
    static LevelConfig for_length(std::uint64_t n, double delta = 0.01);

    /// Frontier size beyond which the search gives up at level k.
    double frontier_limit(unsigned level) const;
};

/// Reproduction type used to pick the canonical codelet behind p_L. Equal to
/// the optimal reproduction type for D < 1/2; at D = 1/2 any type works and
/// the limit of the formula (0, 1/2 or 1) is used.
double level_reproduction_type(double p, const DistortionBudget& dist);

/// p_L for a length-L codelet.
double level_match_probability(std::uint64_t L, const SourceModel& src, const DistortionBudget& dist);
double level_match_probability(std::uint64_t L, double p, const DistortionBudget& dist);

/// ceil(L^2 / p_L), saturating at kLevelSizeLimit.
std::uint64_t level_size(std::uint64_t L, const SourceModel& src, const DistortionBudget& dist);
std::uint64_t level_size(std::uint64_t L, double p, const DistortionBudget& dist);

inline constexpr std::uint64_t kLevelSizeLimit = std::uint64_t{1} << 62;

/// Per-level capacities min(M_{k ell}, cap_{k-1} 2^ell), computed lazily.
class LevelSizes {
public:
    LevelSizes(unsigned ell, double p, DistortionBudget dist);

    /// Switches the source parameter; cached capacities are dropped.
    void reset(double p);
    double p() const { return p_; }
    unsigned ell() const { return ell_; }

    /// Uncapped M_{k ell}.
    std::uint64_t target(unsigned level);
    std::uint64_t capacity(unsigned level);

private:
    void extend_to(unsigned level);

    unsigned ell_;
    double p_;
    DistortionBudget dist_;
    std::vector<std::uint64_t> target_{0};
    std::vector<std::uint64_t> capacity_{1};
};

enum class PromoteOutcome {
    Added,        ///< extension joined the live set of the next level
    AlreadyLive,  ///< extension was live already; nothing changed
    LevelFull,    ///< next level is at capacity; the tree is unchanged
};

/// Frontier sizes |Z_{k ell}| observed by one search, index 0 = level 1.
struct SearchFrontier {
    std::vector<std::size_t> sizes;
    std::size_t max_size() const;
};

struct SearchResult {
    /// Live codelets of the deepest level that had any, in creation order.
    std::vector<NodeId> deepest;
    std::uint32_t depth = 0;
    SearchFrontier frontier;
    bool give_up = false;
    std::uint64_t visits = 0;

    bool found() const { return !deepest.empty(); }
    NodeId best() const { return deepest.empty() ? kNoNode : deepest.front(); }
};

class LevelDictionary {
public:
    /// Complete binary trie of depth ell; every depth-ell string is a
    /// candidate, none is live yet.
    LevelDictionary(unsigned ell, LevelSizes sizes);

    static LevelDictionary idealized_build_init(const LevelConfig& cfg, const SourceModel& src,
                                                const DistortionBudget& dist);

    unsigned ell() const { return ell_; }
    NodeId root() const { return 0; }
    NodeId child(NodeId v, bool bit) const { return nodes_[v].child[bit ? 1 : 0]; }
    std::uint32_t depth(NodeId v) const { return nodes_[v].depth; }
    unsigned level(NodeId v) const { return nodes_[v].depth / ell_; }
    bool is_live(NodeId v) const { return nodes_[v].ordinal != kNotLive; }
    /// Promoted nodes (and the root) carry their 2^ell extensions as candidates.
    bool is_promoted(NodeId v) const { return nodes_[v].child[0] != kNoNode; }
    /// A live codelet is saturated when all of its extensions are live; such a
    /// codelet can never be the longest match while a full block of input remains.
    bool is_saturated(NodeId v) const { return nodes_[v].live_children == block_count(); }
    std::uint64_t ordinal(NodeId v) const { return nodes_[v].ordinal; }
    BitSequence codelet(NodeId v) const;

    /// Node spelled by the first `length` bits of x starting at pos, or kNoNode.
    NodeId find(const BitSequence& x, std::size_t pos, std::size_t length) const;

    std::size_t node_count() const { return nodes_.size(); }
    std::uint64_t live_count() const { return by_ordinal_.size(); }
    NodeId live_by_ordinal(std::uint64_t ordinal) const { return by_ordinal_[ordinal]; }
    std::uint64_t live_count(unsigned level) const;
    std::vector<std::uint64_t> live_counts() const { return level_live_; }
    std::uint32_t max_live_depth() const { return max_live_depth_; }
    std::vector<NodeId> live_codelets(unsigned level) const;

    /// Candidate nodes at depth level*ell (materialized extensions).
    std::vector<NodeId> candidates(unsigned level) const;

    LevelSizes& sizes() { return sizes_; }
    const LevelSizes& sizes() const { return sizes_; }
    std::uint64_t capacity(unsigned level) { return sizes_.capacity(level); }

    /// Exposes the 2^ell extensions of `live` (or of the root, for level 1) and
    /// makes the one spelled by `extension` live. `extension` holds ell bits,
    /// first bit in the lowest position.
    PromoteOutcome promote_to_next_level(NodeId live, std::uint64_t extension);

    /// Coding ranks. Unsaturated codelets are "active"; with exclusion on,
    /// only active codelets are addressable.
    std::uint64_t active_count() const { return active_.total(); }
    std::uint64_t active_rank(NodeId v) const { return active_.rank(nodes_[v].ordinal); }
    NodeId active_by_rank(std::uint64_t rank) const { return by_ordinal_[active_.select(rank)]; }

    std::uint64_t block_count() const { return std::uint64_t{1} << ell_; }

private:
    static constexpr std::uint64_t kNotLive = UINT64_MAX;

    struct Node {
        NodeId child[2] = {kNoNode, kNoNode};
        NodeId parent = kNoNode;
        std::uint64_t ordinal = kNotLive;
        std::uint32_t live_children = 0;
        std::uint32_t depth = 0;
        bool bit = false;
    };

    NodeId add_node(NodeId parent, bool bit);
    void materialize_extensions(NodeId v);
    void make_live(NodeId v);

    unsigned ell_;
    LevelSizes sizes_;
    std::vector<Node> nodes_;
    std::vector<NodeId> by_ordinal_;
    std::vector<std::uint64_t> level_live_{0};
    std::uint32_t max_live_depth_ = 0;
    FenwickFlags active_;
};

/// Longest live codelet that prefix-wise matches x[pos, ...). Builds Z_ell
/// from the depth-ell candidates, then Z_{(k+1) ell} from the extensions of
/// the members of Z_{k ell}; gives up (and stops descending) as soon as some
/// |Z_{k ell}| exceeds (k ell)^4 / delta. Codelets longer than the remaining
/// input are not considered.
SearchResult partial_match_search(const LevelDictionary& dict, const BitSequence& x,
                                  std::size_t pos, const DistortionBudget& dist, double delta);

} // namespace clp
