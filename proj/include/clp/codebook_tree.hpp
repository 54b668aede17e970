#pragma once

// Practical-variant codebook: a complete binary trie whose leaves are the
// current codelets. Choosing a codelet replaces it by its two one-bit
// extensions, exactly as the LZ78 trie grows.

#include "clp/bit_sequence.hpp"
#include "clp/matching.hpp"
#include "clp/types.hpp"

#include <cstdint>
#include <vector>

namespace clp {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = UINT32_MAX;

class CodebookTree {
public:
    /// C_0 = {0, 1}.
    static CodebookTree init_practical();

    NodeId root() const { return 0; }
    NodeId child(NodeId v, bool bit) const { return nodes_[v].child[bit ? 1 : 0]; }
    bool is_leaf(NodeId v) const { return nodes_[v].child[0] == kNoNode; }
    std::uint32_t depth(NodeId v) const { return nodes_[v].depth; }
    /// Creation order; ties between equal-depth codelets go to the smaller one.
    std::uint64_t ordinal(NodeId v) const { return nodes_[v].ordinal; }
    /// Deepest leaf in the subtree of v.
    std::uint32_t max_leaf_depth(NodeId v) const { return nodes_[v].max_leaf_depth; }

    BitSequence codelet(NodeId v) const;
    /// Leaf at the end of `path`, or kNoNode.
    NodeId find(const BitSequence& path) const;

    std::size_t leaf_count() const { return leaves_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::vector<NodeId> leaves() const;
    /// Leaf codelets in lexicographic order.
    std::vector<BitSequence> codelets() const;

    /// Turns a leaf into an internal node with children v0 and v1.
    /// Throws NotALeaf for internal nodes.
    void extend(NodeId leaf);

private:
    struct Node {
        NodeId child[2] = {kNoNode, kNoNode};
        NodeId parent = kNoNode;
        std::uint32_t depth = 0;
        std::uint32_t max_leaf_depth = 0;
        std::uint64_t ordinal = 0;
        bool bit = false;
    };

    NodeId add_child(NodeId parent, bool bit);

    std::vector<Node> nodes_;
    std::size_t leaves_ = 0;
    std::uint64_t next_ordinal_ = 0;
};

/// A leaf that matches the input, with the mismatch count against it.
struct LeafMatch {
    NodeId leaf = kNoNode;
    std::uint32_t depth = 0;
    std::uint64_t mismatches = 0;
};

/// Leaves m whose codelet matches x[pos, pos + |m|) under `rel`. Leaves longer
/// than the remaining input are never reported. PrefixWise search abandons a
/// branch on the first violated prefix; FullCodelet search abandons it once
/// the mismatches exceed what the deepest leaf below could absorb.
std::vector<LeafMatch> find_matches(const CodebookTree& tree, const BitSequence& x,
                                    std::size_t pos, const DistortionBudget& dist,
                                    MatchRelation rel);

inline std::vector<LeafMatch> find_matches(const CodebookTree& tree, const BitSequence& unparsed,
                                           const DistortionBudget& dist, MatchRelation rel) {
    return find_matches(tree, unparsed, 0, dist, rel);
}

} // namespace clp
