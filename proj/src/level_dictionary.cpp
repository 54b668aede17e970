#include "clp/level_dictionary.hpp"

#include "clp/errors.hpp"
#include "clp/matching.hpp"
#include "clp/rd_math.hpp"

#include <algorithm>
#include <cmath>

namespace clp {

unsigned LevelConfig::default_ell(std::uint64_t n) {
    if (n < 4) return 2;
    const double ll = std::log2(std::log2(static_cast<double>(n)));
    return std::max(2u, static_cast<unsigned>(std::ceil(ll - 1e-12)));
}

LevelConfig LevelConfig::for_length(std::uint64_t n, double delta) {
    return {default_ell(n), n, delta};
}

double LevelConfig::frontier_limit(unsigned level) const {
    const double kl = static_cast<double>(level) * ell;
    return kl * kl * kl * kl / delta;
}

double level_reproduction_type(double p, const DistortionBudget& dist) {
    if (2ull * dist.num < dist.den) return optimal_reproduction_type(p, dist.value());
    if (p > 0.5) return 1.0;
    if (p < 0.5) return 0.0;
    return 0.5;
}

double level_match_probability(std::uint64_t L, double p, const DistortionBudget& dist) {
    const BitSequence y = canonical_sequence(L, level_reproduction_type(p, dist));
    return match_probability(y, dist, p);
}

double level_match_probability(std::uint64_t L, const SourceModel& src, const DistortionBudget& dist) {
    return level_match_probability(L, src.value(), dist);
}

std::uint64_t level_size(std::uint64_t L, double p, const DistortionBudget& dist) {
    const double pl = level_match_probability(L, p, dist);
    if (!(pl > 0.0)) return kLevelSizeLimit;
    const double m = static_cast<double>(L) * static_cast<double>(L) / pl;
    if (m >= static_cast<double>(kLevelSizeLimit)) return kLevelSizeLimit;
    // Absorb rounding noise so that exact quotients such as 4 / 0.5 stay exact.
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(m * (1.0 - 1e-12))));
}

std::uint64_t level_size(std::uint64_t L, const SourceModel& src, const DistortionBudget& dist) {
    return level_size(L, src.value(), dist);
}

LevelSizes::LevelSizes(unsigned ell, double p, DistortionBudget dist)
    : ell_(ell), p_(p), dist_(dist) {
    if (ell == 0 || ell > 16) throw InvalidArgument("block width ell must lie in [1, 16]");
}

void LevelSizes::reset(double p) {
    if (p == p_) return;
    p_ = p;
    target_.resize(1);
    capacity_.resize(1);
}

void LevelSizes::extend_to(unsigned level) {
    while (target_.size() <= level) {
        const unsigned k = static_cast<unsigned>(target_.size());
        const std::uint64_t m = level_size(std::uint64_t{k} * ell_, p_, dist_);
        const std::uint64_t prev = capacity_.back();
        const std::uint64_t available =
            prev >= (kLevelSizeLimit >> ell_) ? kLevelSizeLimit : prev << ell_;
        target_.push_back(m);
        capacity_.push_back(std::min(m, available));
    }
}

std::uint64_t LevelSizes::target(unsigned level) {
    extend_to(level);
    return target_[level];
}

std::uint64_t LevelSizes::capacity(unsigned level) {
    extend_to(level);
    return capacity_[level];
}

std::size_t SearchFrontier::max_size() const {
    return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

LevelDictionary::LevelDictionary(unsigned ell, LevelSizes sizes)
    : ell_(ell), sizes_(std::move(sizes)) {
    if (ell != sizes_.ell()) throw InvalidArgument("level sizes built for a different ell");
    nodes_.emplace_back();
    materialize_extensions(root());
}

LevelDictionary LevelDictionary::idealized_build_init(const LevelConfig& cfg, const SourceModel& src,
                                                      const DistortionBudget& dist) {
    return LevelDictionary(cfg.ell, LevelSizes(cfg.ell, src.value(), dist));
}

NodeId LevelDictionary::add_node(NodeId parent, bool bit) {
    const auto id = static_cast<NodeId>(nodes_.size());
    Node n;
    n.parent = parent;
    n.depth = nodes_[parent].depth + 1;
    n.bit = bit;
    nodes_.push_back(n);
    nodes_[parent].child[bit ? 1 : 0] = id;
    return id;
}

void LevelDictionary::materialize_extensions(NodeId v) {
    if (is_promoted(v)) return;
    const std::uint32_t target = nodes_[v].depth + ell_;
    std::vector<NodeId> stack{v};
    while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        if (nodes_[u].depth == target) continue;
        const NodeId c0 = add_node(u, false);
        const NodeId c1 = add_node(u, true);
        stack.push_back(c1);
        stack.push_back(c0);
    }
}

void LevelDictionary::make_live(NodeId v) {
    nodes_[v].ordinal = by_ordinal_.size();
    by_ordinal_.push_back(v);
    const unsigned k = level(v);
    if (level_live_.size() <= k) level_live_.resize(k + 1, 0);
    ++level_live_[k];
    max_live_depth_ = std::max(max_live_depth_, nodes_[v].depth);
    active_.push_back(!is_saturated(v));
}

PromoteOutcome LevelDictionary::promote_to_next_level(NodeId live, std::uint64_t extension) {
    if (live != root() && !is_live(live))
        throw InvalidArgument("promote_to_next_level: node is not a live codelet");
    const unsigned next_level = level(live) + 1;
    // Locate the extension first so a full level leaves the tree untouched.
    if (is_promoted(live)) {
        NodeId v = live;
        for (unsigned i = 0; i < ell_; ++i) v = child(v, (extension >> i) & 1u);
        if (is_live(v)) return PromoteOutcome::AlreadyLive;
    }
    if (live_count(next_level) >= sizes_.capacity(next_level)) return PromoteOutcome::LevelFull;
    materialize_extensions(live);
    NodeId v = live;
    for (unsigned i = 0; i < ell_; ++i) v = child(v, (extension >> i) & 1u);
    make_live(v);
    if (live != root()) {
        ++nodes_[live].live_children;
        if (is_saturated(live)) active_.set(nodes_[live].ordinal, false);
    }
    return PromoteOutcome::Added;
}

std::uint64_t LevelDictionary::live_count(unsigned level) const {
    return level < level_live_.size() ? level_live_[level] : 0;
}

std::vector<NodeId> LevelDictionary::live_codelets(unsigned lvl) const {
    std::vector<NodeId> out;
    for (NodeId v : by_ordinal_)
        if (level(v) == lvl) out.push_back(v);
    return out;
}

std::vector<NodeId> LevelDictionary::candidates(unsigned lvl) const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < nodes_.size(); ++v)
        if (nodes_[v].depth == lvl * ell_ && v != root()) out.push_back(v);
    return out;
}

BitSequence LevelDictionary::codelet(NodeId v) const {
    BitSequence out(nodes_[v].depth);
    for (NodeId u = v; nodes_[u].parent != kNoNode; u = nodes_[u].parent)
        out.set(nodes_[u].depth - 1, nodes_[u].bit);
    return out;
}

NodeId LevelDictionary::find(const BitSequence& x, std::size_t pos, std::size_t length) const {
    NodeId v = root();
    for (std::size_t i = 0; i < length; ++i) {
        v = child(v, x[pos + i]);
        if (v == kNoNode) return kNoNode;
    }
    return v;
}

SearchResult partial_match_search(const LevelDictionary& dict, const BitSequence& x,
                                  std::size_t pos, const DistortionBudget& dist, double delta) {
    SearchResult result;
    const std::size_t remaining = pos < x.size() ? x.size() - pos : 0;
    const unsigned ell = dict.ell();

    struct Entry {
        NodeId node;
        std::uint64_t mismatches;
    };
    std::vector<Entry> frontier{{dict.root(), 0}}, next, stack;

    for (unsigned k = 1; std::size_t{k} * ell <= remaining; ++k) {
        next.clear();
        for (const Entry& e : frontier) {
            if (!dict.is_promoted(e.node)) continue;
            const std::uint32_t base = dict.depth(e.node);
            stack.assign(1, e);
            while (!stack.empty()) {
                const Entry cur = stack.back();
                stack.pop_back();
                const std::uint32_t d = dict.depth(cur.node);
                if (d == base + ell) {
                    next.push_back(cur);
                    continue;
                }
                const bool xb = x[pos + d];
                for (int b = 1; b >= 0; --b) {
                    const NodeId c = dict.child(cur.node, b != 0);
                    ++result.visits;
                    const std::uint64_t m = cur.mismatches + (xb != (b != 0));
                    if (dist.allows(m, d + 1)) stack.push_back({c, m});
                }
            }
        }
        if (next.empty()) break;
        result.frontier.sizes.push_back(next.size());
        if (static_cast<double>(next.size()) > std::pow(double(k) * ell, 4.0) / delta) {
            result.give_up = true;
            break;
        }
        std::vector<NodeId> live;
        for (const Entry& e : next)
            if (dict.is_live(e.node)) live.push_back(e.node);
        if (!live.empty()) {
            std::sort(live.begin(), live.end(),
                      [&](NodeId a, NodeId b) { return dict.ordinal(a) < dict.ordinal(b); });
            result.deepest = std::move(live);
            result.depth = k * ell;
        }
        std::swap(frontier, next);
    }
    return result;
}

} // namespace clp
