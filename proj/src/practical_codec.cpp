#include "clp/codec.hpp"

#include "clp/errors.hpp"
#include "clp/lz78.hpp"
#include "clp/rd_math.hpp"

#include <cmath>
#include <limits>

namespace clp {

namespace {

constexpr double kMetricTie = 1e-12;

double metric(const CodeletCandidate& c, const DistortionBudget& dist) {
    const auto im = lower_mutual_info(type_of(c.codelet).value(), c.parsed.value(), dist.value());
    return im ? *im : std::numeric_limits<double>::infinity();
}

} // namespace

std::size_t select_codelet(std::span<const CodeletCandidate> candidates, const DistortionBudget& dist) {
    if (candidates.empty()) throw EmptyMatchSet();
    std::size_t best = 0;
    double best_metric = metric(candidates[0], dist);
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        const double m = metric(candidates[i], dist);
        const auto& a = candidates[i].codelet;
        const auto& b = candidates[best].codelet;
        bool better;
        if (std::isinf(m) && std::isinf(best_metric))
            better = false;
        else
            better = m < best_metric - kMetricTie;
        if (!better && (std::abs(m - best_metric) <= kMetricTie ||
                        (std::isinf(m) && std::isinf(best_metric)))) {
            better = a.size() > b.size() || (a.size() == b.size() && a < b);
        }
        if (better) {
            best = i;
            best_metric = m;
        }
    }
    return best;
}

PracticalEncoder::PracticalEncoder(const BitSequence& x, DistortionBudget dist, MatchRelation rel)
    : x_(x), dist_(dist), rel_(rel), tree_(CodebookTree::init_practical()) {
    y_.reserve(x.size());
}

PracticalStep PracticalEncoder::step() {
    PracticalStep s;
    s.begin = pos_;
    s.matches = find_matches(tree_, x_, pos_, dist_, rel_);

    if (s.matches.empty()) {
        // Only reachable at the tail, when every matching leaf is too long.
        const std::size_t len = x_.size() - pos_;
        s.event = {ParseEvent::Kind::Escape, x_.slice(pos_, len), len};
    } else {
        std::vector<CodeletCandidate> cands;
        cands.reserve(s.matches.size());
        for (const auto& m : s.matches) {
            const std::uint64_t ones = parsed_ones_ + x_.count_ones(pos_, m.depth);
            cands.push_back({tree_.codelet(m.leaf), {ones, pos_ + m.depth}});
        }
        const std::size_t pick = select_codelet(cands, dist_);
        const LeafMatch& chosen = s.matches[pick];
        s.event = {ParseEvent::Kind::Codelet, std::move(cands[pick].codelet), chosen.depth};
        tree_.extend(chosen.leaf);
    }

    parsed_ones_ += x_.count_ones(pos_, s.event.length);
    pos_ += s.event.length;
    y_.append(s.event.bits);
    events_.push_back(s.event);
    return s;
}

void PracticalEncoder::run() {
    while (!done()) step();
}

EncodeResult encode_practical(const BitSequence& x, const DistortionBudget& dist,
                              const std::optional<SourceModel>& src, MatchRelation rel) {
    PracticalEncoder enc(x, dist, rel);
    enc.run();

    EncodeResult r;
    r.y = enc.reconstruction();
    r.events = enc.events();
    r.stream.header.n = x.size();
    r.stream.header.set_distortion(dist);
    r.stream.header.set_source(src);
    r.stream.header.ell = 0;
    r.stream.header.variant = Variant::Practical;
    r.stream.header.relation = rel;
    r.stream.payload = lz78_encode(r.y);
    return r;
}

} // namespace clp
