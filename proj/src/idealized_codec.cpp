#include "clp/codec.hpp"

#include "clp/errors.hpp"
#include "clp/rng.hpp"

#include <algorithm>
#include <cmath>

namespace clp {

namespace {

// Estimates of p are snapped to this grid so that level sizes are only
// recomputed when the estimate actually moves.
constexpr double kEstimateGrid = 256.0;

double initial_p(const std::optional<SourceModel>& src) { return src ? src->value() : 0.5; }

} // namespace

IdealizedModel::IdealizedModel(const LevelConfig& cfg, const std::optional<SourceModel>& src,
                               const DistortionBudget& dist)
    : ell_(cfg.ell),
      dist_(dist),
      known_p_(src.has_value()),
      dict_(cfg.ell, LevelSizes(cfg.ell, initial_p(src), dist)) {}

bool IdealizedModel::exclusion(std::uint64_t remaining) const {
    return remaining >= std::uint64_t{dict_.max_live_depth()} + ell_;
}

std::uint64_t IdealizedModel::alphabet(std::uint64_t remaining) const {
    return 1 + (exclusion(remaining) ? dict_.active_count() : dict_.live_count());
}

std::uint64_t IdealizedModel::symbol_of(NodeId codelet, std::uint64_t remaining) const {
    if (!exclusion(remaining)) return 1 + dict_.ordinal(codelet);
    if (dict_.is_saturated(codelet))
        throw std::logic_error("saturated codelet chosen while it is not addressable");
    return 1 + dict_.active_rank(codelet);
}

NodeId IdealizedModel::codelet_of(std::uint64_t symbol, std::uint64_t remaining) const {
    if (symbol == 0 || symbol >= alphabet(remaining)) throw CorruptStream("codelet symbol out of range");
    if (!exclusion(remaining)) return dict_.live_by_ordinal(symbol - 1);
    return dict_.active_by_rank(symbol - 1);
}

void IdealizedModel::after_phrase(const BitSequence& y, std::size_t begin, std::size_t length,
                                  NodeId codelet) {
    NodeId current = kNoNode;
    if (length >= ell_) {
        const std::uint64_t block = y.window(begin, ell_);
        if (previous_ != kNoNode) dict_.promote_to_next_level(previous_, block);
        if (codelet != kNoNode) {
            current = codelet;
        } else {
            dict_.promote_to_next_level(dict_.root(), block);
            const NodeId v = dict_.find(y, begin, ell_);
            if (dict_.is_live(v)) current = v;
        }
    }
    previous_ = current;

    y_ones_ += y.count_ones(begin, length);
    y_length_ += length;
    refresh_estimate();
}

void IdealizedModel::refresh_estimate() {
    if (known_p_ || y_length_ == 0) return;
    // The reconstruction has type close to (p - D) / (1 - 2D); invert that.
    const double tau = static_cast<double>(y_ones_) / static_cast<double>(y_length_);
    const double d = dist_.value();
    const double raw = std::clamp(tau * (1.0 - 2.0 * d) + d, 0.0, 1.0);
    dict_.sizes().reset(std::round(raw * kEstimateGrid) / kEstimateGrid);
}

IdealizedEncoder::IdealizedEncoder(const BitSequence& x, const DistortionBudget& dist,
                                   const std::optional<SourceModel>& src,
                                   const IdealizedOptions& opts)
    : x_(x), dist_(dist), src_(src), opts_(opts), model_(opts.level, src, dist) {
    if (opts.level.horizon_n != 0 && opts.level.horizon_n != x.size())
        throw InvalidArgument("input length differs from the configured horizon");
    if (!(opts.level.delta > 0.0 && opts.level.delta < 1.0))
        throw InvalidArgument("delta must lie in (0, 1)");
    y_.reserve(x.size());
}

const ParseEvent& IdealizedEncoder::step() {
    const unsigned ell = opts_.level.ell;
    const std::uint64_t remaining = x_.size() - pos_;
    ParseEvent ev;
    NodeId used = kNoNode;

    if (remaining < ell) {
        ev = {ParseEvent::Kind::Escape, x_.slice(pos_, remaining), remaining};
        writer_.write_bits(x_, pos_, remaining);
        ++stats_.escapes;
    } else {
        const SearchResult sr = partial_match_search(model_.dictionary(), x_, pos_, dist_,
                                                     opts_.level.delta);
        stats_.node_visits += sr.visits;
        for (std::size_t k = 0; k < sr.frontier.sizes.size(); ++k) {
            if (stats_.max_frontier.size() <= k) stats_.max_frontier.resize(k + 1, 0);
            stats_.max_frontier[k] = std::max(stats_.max_frontier[k], sr.frontier.sizes[k]);
        }
        if (sr.give_up) ++stats_.give_ups;

        if (sr.found() && !sr.give_up) {
            used = sr.best();
            if (opts_.tie_seed && sr.deepest.size() > 1) {
                CounterRng rng(*opts_.tie_seed, tie_counter_);
                used = sr.deepest[rng.below(sr.deepest.size())];
                tie_counter_ = rng.counter();
            }
            writer_.write_phased(model_.symbol_of(used, remaining), model_.alphabet(remaining));
            ev = {ParseEvent::Kind::Codelet, model_.dictionary().codelet(used), sr.depth};
        } else {
            writer_.write_phased(0, model_.alphabet(remaining));
            writer_.write_bits(x_, pos_, ell);
            ev = {ParseEvent::Kind::Escape, x_.slice(pos_, ell), ell};
            ++stats_.escapes;
        }
    }

    const std::size_t begin = y_.size();
    y_.append(ev.bits);
    model_.after_phrase(y_, begin, ev.length, used);
    pos_ += ev.length;
    ++stats_.phrases;
    events_.push_back(std::move(ev));
    return events_.back();
}

void IdealizedEncoder::run() {
    while (!done()) step();
}

IdealizedResult IdealizedEncoder::finish() && {
    run();
    IdealizedResult r;
    r.y = std::move(y_);
    r.events = std::move(events_);
    r.stats = std::move(stats_);
    r.stats.live_per_level = model_.dictionary().live_counts();
    Header& h = r.stream.header;
    h.n = x_.size();
    h.set_distortion(dist_);
    h.set_source(src_);
    h.ell = static_cast<std::uint16_t>(opts_.level.ell);
    h.variant = Variant::Idealized;
    h.relation = MatchRelation::PrefixWise;
    r.stream.payload = writer_.take();
    return r;
}

IdealizedResult encode_idealized(const BitSequence& x, const DistortionBudget& dist,
                                 const std::optional<SourceModel>& src, const IdealizedOptions& opts) {
    return IdealizedEncoder(x, dist, src, opts).finish();
}

IdealizedResult encode_idealized(const BitSequence& x, const DistortionBudget& dist,
                                 const std::optional<SourceModel>& src, const LevelConfig& cfg) {
    return encode_idealized(x, dist, src, IdealizedOptions{cfg, std::nullopt});
}

} // namespace clp
