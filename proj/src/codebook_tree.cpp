#include "clp/codebook_tree.hpp"

#include "clp/errors.hpp"

#include <algorithm>

namespace clp {

CodebookTree CodebookTree::init_practical() {
    CodebookTree t;
    t.nodes_.emplace_back();
    t.leaves_ = 1;
    t.extend(t.root());
    return t;
}

NodeId CodebookTree::add_child(NodeId parent, bool bit) {
    const auto id = static_cast<NodeId>(nodes_.size());
    Node n;
    n.parent = parent;
    n.depth = nodes_[parent].depth + 1;
    n.max_leaf_depth = n.depth;
    n.ordinal = next_ordinal_++;
    n.bit = bit;
    nodes_.push_back(n);
    nodes_[parent].child[bit ? 1 : 0] = id;
    return id;
}

void CodebookTree::extend(NodeId leaf) {
    if (leaf >= nodes_.size() || !is_leaf(leaf))
        throw NotALeaf("extend_codelet: node " + std::to_string(leaf) + " is not a leaf");
    add_child(leaf, false);
    add_child(leaf, true);
    ++leaves_;
    const std::uint32_t d = nodes_[leaf].depth + 1;
    for (NodeId v = leaf; v != kNoNode && nodes_[v].max_leaf_depth < d; v = nodes_[v].parent)
        nodes_[v].max_leaf_depth = d;
}

BitSequence CodebookTree::codelet(NodeId v) const {
    BitSequence out(nodes_[v].depth);
    for (NodeId u = v; nodes_[u].parent != kNoNode; u = nodes_[u].parent)
        out.set(nodes_[u].depth - 1, nodes_[u].bit);
    return out;
}

NodeId CodebookTree::find(const BitSequence& path) const {
    NodeId v = root();
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (is_leaf(v)) return kNoNode;
        v = child(v, path[i]);
    }
    return is_leaf(v) ? v : kNoNode;
}

std::vector<NodeId> CodebookTree::leaves() const {
    std::vector<NodeId> out;
    out.reserve(leaves_);
    for (NodeId v = 0; v < nodes_.size(); ++v)
        if (is_leaf(v) && v != root()) out.push_back(v);
    std::sort(out.begin(), out.end(),
              [&](NodeId a, NodeId b) { return nodes_[a].ordinal < nodes_[b].ordinal; });
    return out;
}

std::vector<BitSequence> CodebookTree::codelets() const {
    std::vector<BitSequence> out;
    for (NodeId v : leaves()) out.push_back(codelet(v));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LeafMatch> find_matches(const CodebookTree& tree, const BitSequence& x,
                                    std::size_t pos, const DistortionBudget& dist,
                                    MatchRelation rel) {
    std::vector<LeafMatch> out;
    if (pos >= x.size()) return out;
    const std::size_t remaining = x.size() - pos;

    struct Frame {
        NodeId node;
        std::uint64_t mismatches;
    };
    std::vector<Frame> stack{{tree.root(), 0}};
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        const std::uint32_t d = tree.depth(f.node);
        if (tree.is_leaf(f.node)) {
            if (d > 0 && dist.allows(f.mismatches, d)) out.push_back({f.node, d, f.mismatches});
            continue;
        }
        if (d >= remaining) continue;
        const bool xb = x[pos + d];
        // Push the 1-branch first so the 0-branch is explored first.
        for (int b = 1; b >= 0; --b) {
            const NodeId c = tree.child(f.node, b != 0);
            const std::uint64_t m = f.mismatches + (xb != (b != 0));
            if (rel == MatchRelation::PrefixWise) {
                if (!dist.allows(m, d + 1)) continue;
            } else if (!dist.allows(m, std::min<std::uint64_t>(tree.max_leaf_depth(c), remaining))) {
                continue;
            }
            stack.push_back({c, m});
        }
    }
    return out;
}

} // namespace clp
