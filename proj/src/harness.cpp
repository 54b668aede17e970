#include "clp/harness.hpp"

#include "clp/errors.hpp"
#include "clp/matching.hpp"
#include "clp/rd_math.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

namespace clp {

namespace {

constexpr double kCompareEps = 1e-12;

struct Moments {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t count = 0;

    void add(double v) {
        sum += v;
        sum_sq += v * v;
        ++count;
    }
    double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
    double variance() const {
        if (count < 2) return 0.0;
        const double m = mean();
        return std::max(0.0, (sum_sq - static_cast<double>(count) * m * m) / static_cast<double>(count - 1));
    }
    double std_error() const { return count ? std::sqrt(variance() / static_cast<double>(count)) : 0.0; }
};

std::string cell_name(const ExperimentConfig& cfg) {
    std::ostringstream os;
    os << "p=" << cfg.p.to_string() << ";D=" << cfg.distortion.to_string() << ";ell=" << cfg.ell
       << ";L=" << cfg.length;
    return os.str();
}

std::uint64_t count_matches(const BitSequence& x, const std::vector<BitSequence>& level,
                            const DistortionBudget& dist) {
    std::uint64_t n = 0;
    for (const auto& y : level)
        if (matches_prefixwise(x, y, dist)) ++n;
    return n;
}

std::vector<BitSequence> live_level(const LevelDictionary& dict, unsigned level) {
    std::vector<BitSequence> out;
    for (NodeId v : dict.live_codelets(level)) out.push_back(dict.codelet(v));
    return out;
}

double level_type(const ExperimentConfig& cfg) {
    return level_reproduction_type(cfg.p.value(), cfg.budget());
}

// All length-L strings with `ones` ones, as masks (bit i = symbol i).
std::vector<std::uint32_t> type_class(unsigned length, unsigned ones) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (1u << length); ++m)
        if (static_cast<unsigned>(std::popcount(m)) == ones) out.push_back(m);
    return out;
}

std::uint32_t random_of_type(unsigned length, unsigned ones, CounterRng& rng) {
    std::vector<unsigned> pos(length);
    std::iota(pos.begin(), pos.end(), 0u);
    for (unsigned i = length; i > 1; --i) std::swap(pos[i - 1], pos[rng.below(i)]);
    std::uint32_t m = 0;
    for (unsigned i = 0; i < ones; ++i) m |= 1u << pos[i];
    return m;
}

void require_level_length(const ExperimentConfig& cfg) {
    if (cfg.length % cfg.ell != 0)
        throw InvalidArgument("length must be a multiple of ell");
}

// Parses until level `level` holds `target` live codelets or the input runs out.
void run_until_full(IdealizedEncoder& enc, unsigned level, std::uint64_t target) {
    while (!enc.done() && enc.dictionary().live_count(level) < target) enc.step();
}

// Per-trial match counts at depth L and L + ell against a freshly built dictionary.
struct LevelSample {
    std::uint64_t n_short = 0;
    std::uint64_t n_long = 0;
    std::uint64_t live_short = 0;
    std::uint64_t live_long = 0;
};

std::vector<LevelSample> sample_levels(const ExperimentConfig& cfg) {
    require_level_length(cfg);
    const unsigned L = cfg.length;
    const unsigned level = L / cfg.ell;
    const std::uint64_t target = effective_level_size(cfg, L);
    const CounterRng root(cfg.seed);
    return run_trials<LevelSample>(cfg.trials, cfg.threads, [&](std::uint64_t i) {
        CounterRng rng = root.split(i);
        const BitSequence input = bernoulli_sequence(cfg.builder_n, cfg.p.value(), rng);
        IdealizedEncoder enc(input, cfg.budget(), cfg.source(),
                             IdealizedOptions{LevelConfig{cfg.ell, cfg.builder_n, cfg.delta}, std::nullopt});
        run_until_full(enc, level, target);
        const auto short_level = live_level(enc.dictionary(), level);
        const auto long_level = live_level(enc.dictionary(), level + 1);
        const BitSequence x = bernoulli_sequence(L + cfg.ell, cfg.p.value(), rng);
        LevelSample s;
        s.n_short = count_matches(x.slice(0, L), short_level, cfg.budget());
        s.n_long = count_matches(x, long_level, cfg.budget());
        s.live_short = short_level.size();
        s.live_long = long_level.size();
        return s;
    });
}

} // namespace

bool LemmaReport::verdict() const {
    const double slack = slack_sigmas * std_error + kCompareEps * std::max(1.0, std::abs(bound));
    switch (comparison) {
    case Comparison::AtMost: return estimate <= bound + slack;
    case Comparison::AtLeast: return estimate >= bound - slack;
    case Comparison::Equal: return std::abs(estimate - bound) <= slack;
    }
    return false;
}

LemmaReport make_report(std::string lemma, std::string cell, double estimate, double bound,
                        std::uint64_t samples, double std_error, Comparison cmp, std::string note) {
    LemmaReport r;
    r.lemma = std::move(lemma);
    r.cell = std::move(cell);
    r.estimate = estimate;
    r.bound = bound;
    r.samples = std::max<std::uint64_t>(samples, 1);
    r.std_error = std_error;
    r.comparison = cmp;
    r.note = std::move(note);
    r.pass = r.verdict();
    return r;
}

BitSequence bernoulli_sequence(std::uint64_t n, double p, CounterRng& rng) {
    BitSequence x;
    x.reserve(n);
    if (p == 0.5) {
        // One generator call per 64 symbols.
        std::uint64_t i = 0;
        for (; i + 64 <= n; i += 64) x.append_word(rng(), 64);
        if (i < n) x.append_word(rng(), static_cast<unsigned>(n - i));
        return x;
    }
    for (std::uint64_t i = 0; i < n; ++i) x.push_back(rng.uniform() < p);
    return x;
}

std::vector<BitSequence> build_level(const ExperimentConfig& cfg, CounterRng rng) {
    require_level_length(cfg);
    const BitSequence input = bernoulli_sequence(cfg.builder_n, cfg.p.value(), rng);
    IdealizedEncoder enc(input, cfg.budget(), cfg.source(),
                         IdealizedOptions{LevelConfig{cfg.ell, cfg.builder_n, cfg.delta}, std::nullopt});
    run_until_full(enc, cfg.length / cfg.ell, effective_level_size(cfg, cfg.length));
    return live_level(enc.dictionary(), cfg.length / cfg.ell);
}

std::uint64_t effective_level_size(const ExperimentConfig& cfg, unsigned length) {
    if (length % cfg.ell != 0) throw InvalidArgument("length must be a multiple of ell");
    LevelSizes sizes(cfg.ell, cfg.p.value(), cfg.budget());
    return sizes.capacity(length / cfg.ell);
}

// The level sizes in the lemmas are those of the realized dictionary: the
// usage-driven fill stops short of the capacity once live codelets cover
// their neighbours, so E|D_L| stands in for M_L.
LemmaReport check_match_count_mean(const ExperimentConfig& cfg) {
    const auto samples = sample_levels(cfg);
    const double pl = level_match_probability(cfg.length, cfg.p.value(), cfg.budget());
    Moments n, size, diff;
    for (const auto& s : samples) {
        n.add(static_cast<double>(s.n_short));
        size.add(static_cast<double>(s.live_short));
        diff.add(static_cast<double>(s.n_short) - static_cast<double>(s.live_short) * pl);
    }
    std::ostringstream note;
    note << "E|D_L|=" << size.mean() << " capacity=" << effective_level_size(cfg, cfg.length) << " p_L=" << pl;
    return make_report("match_count_mean", cell_name(cfg), n.mean(), size.mean() * pl, n.count, diff.std_error(),
                       Comparison::Equal, note.str());
}

LemmaReport check_match_count_second_moment(const ExperimentConfig& cfg) {
    const auto samples = sample_levels(cfg);
    Moments n_short, sq_short, sq_long, sum_short, size_short, size_long;
    for (const auto& s : samples) {
        const auto a = static_cast<double>(s.n_short);
        const auto b = static_cast<double>(s.n_long);
        n_short.add(a);
        sq_short.add(a * a);
        sq_long.add(b * b);
        sum_short.add(a * a + a);
        size_short.add(static_cast<double>(s.live_short));
        size_long.add(static_cast<double>(s.live_long));
    }
    const unsigned L = cfg.length;
    const double pl = level_match_probability(L, cfg.p.value(), cfg.budget());
    const double pll = level_match_probability(L + cfg.ell, cfg.p.value(), cfg.budget());
    const double ratio = (size_long.mean() * pll) / (size_short.mean() * pl);
    const double factor = ratio * ratio;
    const double bound = sum_short.mean() * factor;
    const double se = std::hypot(sq_long.std_error(), factor * sum_short.std_error());
    std::ostringstream note;
    note << "E N_L=" << n_short.mean() << " E N_L^2=" << sq_short.mean() << " E|D_L|=" << size_short.mean()
         << " E|D_L+ell|=" << size_long.mean() << " factor=" << factor;
    return make_report("match_count_second_moment", cell_name(cfg), sq_long.mean(), bound, sq_long.count,
                       se, Comparison::AtMost, note.str());
}

LemmaReport check_coverage_probability(const ExperimentConfig& cfg) {
    const auto samples = sample_levels(cfg);
    Moments hit_short, hit_long, size;
    for (const auto& s : samples) {
        hit_short.add(s.n_short > 0 ? 1.0 : 0.0);
        hit_long.add(s.n_long > 0 ? 1.0 : 0.0);
        size.add(static_cast<double>(s.live_short));
    }
    const double pl = level_match_probability(cfg.length, cfg.p.value(), cfg.budget());
    const double c = 1.0 / (size.mean() * pl);
    const double ps = hit_short.mean();
    const double bound = ps / (ps + c);
    const double slope = c / ((ps + c) * (ps + c));
    const double se = std::hypot(hit_long.std_error(), slope * hit_short.std_error());
    std::ostringstream note;
    note << "P(N_L>0)=" << ps << " E|D_L|=" << size.mean();
    return make_report("coverage_probability", cell_name(cfg), hit_long.mean(), bound, hit_long.count, se,
                       Comparison::AtLeast, note.str());
}

LemmaReport check_symmetry(const ExperimentConfig& cfg) {
    require_level_length(cfg);
    const unsigned L = cfg.length;
    if (L > 16) throw InvalidArgument("symmetry check needs length <= 16");
    const auto ones = static_cast<unsigned>(std::llround(level_type(cfg) * L));
    const auto cls = type_class(L, ones);

    const CounterRng root(cfg.seed);
    const auto included = run_trials<std::vector<std::uint8_t>>(cfg.trials, cfg.threads, [&](std::uint64_t i) {
        const auto level = build_level(cfg, root.split(i));
        std::vector<std::uint8_t> hit(cls.size(), 0);
        for (const auto& y : level) {
            const auto mask = static_cast<std::uint32_t>(y.window(0, L));
            const auto it = std::lower_bound(cls.begin(), cls.end(), mask);
            if (it != cls.end() && *it == mask) hit[static_cast<std::size_t>(it - cls.begin())] = 1;
        }
        return hit;
    });

    std::vector<double> counts(cls.size(), 0.0);
    for (const auto& hit : included)
        for (std::size_t j = 0; j < hit.size(); ++j) counts[j] += hit[j];
    const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
    const double expected = total / static_cast<double>(counts.size());

    double stat = 0.0;
    if (expected > 0.0)
        for (double c : counts) stat += (c - expected) * (c - expected) / expected;
    double critical = 0.0;
    if (counts.size() > 1) {
        boost::math::chi_squared dist(static_cast<double>(counts.size() - 1));
        critical = boost::math::quantile(dist, 0.99);
    }
    std::ostringstream note;
    note << "class size " << cls.size() << ", frequencies";
    for (double c : counts) note << ' ' << c / static_cast<double>(cfg.trials);
    return make_report("symmetry", cell_name(cfg), stat, critical, cfg.trials, 0.0, Comparison::AtMost,
                       note.str());
}

std::vector<LemmaReport> check_cycle_lemma_sweep(const std::vector<unsigned>& lengths,
                                                 const std::vector<Rational>& ps,
                                                 const std::vector<Rational>& distortions) {
    std::vector<LemmaReport> out;
    for (const auto& p : ps) {
        for (const auto& d : distortions) {
            const DistortionBudget dist(d);
            const SourceModel src{p};
            std::uint64_t failures = 0;
            double worst = INFINITY;
            for (unsigned L : lengths) {
                const BitSequence y = canonical_sequence(L, level_reproduction_type(p.value(), dist));
                const double lhs = match_probability(y, dist, src);
                const double rhs = cycle_lemma_lower_bound(y, dist, src);
                if (lhs < rhs) ++failures;
                worst = std::min(worst, lhs / rhs);
            }
            std::ostringstream cell, note;
            cell << "p=" << p.to_string() << ";D=" << d.to_string() << ";L=" << lengths.front() << ".."
                 << lengths.back();
            note << "min ratio " << worst;
            out.push_back(make_report("cycle_lemma", cell.str(), static_cast<double>(failures), 0.0,
                                      lengths.size(), 0.0, Comparison::AtMost, note.str()));
        }
    }
    return out;
}

LemmaReport check_cycle_lemma(const ExperimentConfig& cfg) {
    std::vector<unsigned> lengths;
    for (unsigned L = 2; L <= std::max(2u, cfg.length); ++L) lengths.push_back(L);
    return check_cycle_lemma_sweep(lengths, {cfg.p}, {cfg.distortion}).front();
}

LemmaReport check_frontier_growth(const ExperimentConfig& cfg) {
    if (cfg.n_values.empty()) throw InvalidArgument("frontier check needs an n value");
    const std::uint64_t n = cfg.n_values.front();
    const CounterRng root(cfg.seed);
    const auto violated = run_trials<std::uint8_t>(cfg.trials, cfg.threads, [&](std::uint64_t i) {
        CounterRng rng = root.split(i);
        const BitSequence x = bernoulli_sequence(n, cfg.p.value(), rng);
        IdealizedEncoder enc(x, cfg.budget(), cfg.source(),
                             IdealizedOptions{LevelConfig{cfg.ell, n, cfg.delta}, std::nullopt});
        enc.run();
        return static_cast<std::uint8_t>(enc.stats().frontier_bound_exceeded() ? 1 : 0);
    });
    Moments v;
    for (auto b : violated) v.add(b);
    const double se = std::sqrt(cfg.delta * (1.0 - cfg.delta) / static_cast<double>(v.count));
    std::ostringstream cell;
    cell << "p=" << cfg.p.to_string() << ";D=" << cfg.distortion.to_string() << ";ell=" << cfg.ell
         << ";n=" << n << ";delta=" << cfg.delta;
    return make_report("frontier_growth", cell.str(), v.mean(), cfg.delta, v.count, se, Comparison::AtMost,
                       "fraction of encodes with some |Z_k| above (k ell)^4/delta");
}

LemmaReport check_short_phrases(const ExperimentConfig& cfg) {
    if (cfg.n_values.empty()) throw InvalidArgument("short-phrase check needs an n value");
    const double rd = rate_distortion(cfg.p.value(), cfg.distortion.value());
    if (rd <= 0.0) throw ZeroRate();
    const std::uint64_t n = cfg.n_values.back();
    const double log_n = std::log2(static_cast<double>(n));
    const double threshold = (log_n - 7.0 * cfg.ell) / rd;

    CounterRng rng = CounterRng(cfg.seed).split(0);
    const BitSequence x = bernoulli_sequence(n, cfg.p.value(), rng);
    IdealizedEncoder enc(x, cfg.budget(), cfg.source(),
                         IdealizedOptions{LevelConfig{cfg.ell, n, cfg.delta}, std::nullopt});
    enc.run();
    std::uint64_t count = 0;
    const auto per_level = enc.dictionary().live_counts();
    for (std::size_t k = 1; k < per_level.size(); ++k)
        if (static_cast<double>(k * cfg.ell) < threshold) count += per_level[k];

    std::ostringstream cell, note;
    cell << "p=" << cfg.p.to_string() << ";D=" << cfg.distortion.to_string() << ";ell=" << cfg.ell
         << ";n=" << n;
    note << "depth threshold " << threshold << "; diagnostic only, the bound holds for n large enough";
    return make_report("short_phrases", cell.str(), static_cast<double>(count), n / (log_n * log_n), 1, 0.0,
                       Comparison::AtMost, note.str());
}

LemmaReport check_ball_intersection(const ExperimentConfig& cfg) {
    const unsigned L = cfg.length;
    const unsigned ell = cfg.ell;
    const unsigned total = L + ell;
    if (total > 20) throw InvalidArgument("ball intersection needs length + ell <= 20");
    const DistortionBudget dist = cfg.budget();
    const double p = cfg.p.value();
    const double q = level_type(cfg);
    const auto ones_l = static_cast<unsigned>(std::llround(q * L));
    const auto ones_e = static_cast<unsigned>(std::llround(q * ell));

    // P(x) for every x of each length, indexed by mask.
    auto weights = [p](unsigned len) {
        std::vector<double> w(std::size_t{1} << len);
        for (std::uint32_t m = 0; m < w.size(); ++m) {
            const int k = std::popcount(m);
            w[m] = std::pow(p, k) * std::pow(1.0 - p, static_cast<int>(len) - k);
        }
        return w;
    };
    const auto w_short = weights(L);
    const auto w_long = weights(total);
    auto intersection = [&](std::uint32_t a, std::uint32_t b, unsigned len, const std::vector<double>& w) {
        const auto r = dist.max_mismatches(len);
        double s = 0.0;
        for (std::uint32_t x = 0; x < w.size(); ++x)
            if (static_cast<std::uint64_t>(std::popcount(x ^ a)) <= r &&
                static_cast<std::uint64_t>(std::popcount(x ^ b)) <= r)
                s += w[x];
        return s;
    };
    const double ratio = ball_probability(ones_l + ones_e, total, dist, p) / ball_probability(ones_l, L, dist, p);
    const double factor = ratio * ratio;

    const CounterRng root(cfg.seed);
    const auto failed = run_trials<std::uint8_t>(cfg.trials, cfg.threads, [&](std::uint64_t i) {
        CounterRng rng = root.split(i);
        const auto yl = random_of_type(L, ones_l, rng);
        const auto tl = random_of_type(L, ones_l, rng);
        const auto ye = random_of_type(ell, ones_e, rng);
        const auto te = random_of_type(ell, ones_e, rng);
        const double lhs = intersection(yl | (ye << L), tl | (te << L), total, w_long);
        const double rhs = intersection(yl, tl, L, w_short) * factor;
        return static_cast<std::uint8_t>(lhs > rhs * (1.0 + 1e-12) ? 1 : 0);
    });
    const auto failures = std::accumulate(failed.begin(), failed.end(), std::uint64_t{0});
    std::ostringstream note;
    note << failures << " of " << cfg.trials << " random same-type pairs violate the inequality";
    return make_report("ball_intersection", cell_name(cfg), static_cast<double>(failures), 0.0, cfg.trials, 0.0,
                       Comparison::AtMost, note.str());
}

LemmaReport random_codebook_baseline(const ExperimentConfig& cfg) {
    const unsigned L = cfg.length;
    if (L > 16) throw InvalidArgument("codebook baseline needs length <= 16");
    const DistortionBudget dist = cfg.budget();
    const auto ones = static_cast<unsigned>(std::llround(level_type(cfg) * L));
    const auto cls = type_class(L, ones);
    const std::uint64_t big_n = cls.size();
    const std::uint64_t m = cfg.codebook_size;
    if (m < 1 || m > big_n) throw InvalidArgument("codebook size must lie in [1, |type class|]");
    const auto radius = dist.max_mismatches(L);

    std::vector<std::vector<std::uint32_t>> cover(std::size_t{1} << L);
    for (std::uint32_t x = 0; x < cover.size(); ++x)
        for (std::uint32_t j = 0; j < big_n; ++j)
            if (static_cast<std::uint64_t>(std::popcount(x ^ cls[j])) <= radius) cover[x].push_back(j);
    bool coverable = false;
    for (const auto& c : cover) coverable = coverable || !c.empty();
    if (!coverable) throw InvalidArgument("no source string lies in any type-class ball");

    struct Outcome {
        double pair = 0.0;
        double n_sq = 0.0;
    };
    const CounterRng root(cfg.seed);
    const auto outcomes = run_trials<Outcome>(cfg.trials, cfg.threads, [&](std::uint64_t i) {
        CounterRng rng = root.split(i);
        std::vector<std::uint8_t> in(big_n, 0);
        std::uint64_t size = 0;
        while (size < m) {
            const auto x = static_cast<std::uint32_t>(bernoulli_sequence(L, cfg.p.value(), rng).window(0, L));
            const auto& c = cover[x];
            if (c.empty()) continue;
            const auto pick = c[rng.below(c.size())];
            if (!in[pick]) {
                in[pick] = 1;
                ++size;
            }
        }
        const auto fresh = static_cast<std::uint32_t>(bernoulli_sequence(L, cfg.p.value(), rng).window(0, L));
        double n = 0.0;
        for (auto j : cover[fresh]) n += in[j];
        Outcome o;
        o.pair = (in[0] && (big_n < 2 || in[1])) ? 1.0 : 0.0;
        o.n_sq = n * n;
        return o;
    });
    Moments pair, nsq;
    for (const auto& o : outcomes) {
        pair.add(o.pair);
        nsq.add(o.n_sq);
    }
    const double expected = big_n < 2 ? 1.0
                                      : static_cast<double>(m * (m - 1)) / static_cast<double>(big_n * (big_n - 1));
    const double se = std::sqrt(expected * (1.0 - expected) / static_cast<double>(pair.count));
    std::ostringstream cell, note;
    cell << cell_name(cfg) << ";M=" << m;
    note << "E N^2=" << nsq.mean() << " class size " << big_n;
    return make_report("random_codebook_baseline", cell.str(), pair.mean(), expected, pair.count, se,
                       Comparison::Equal, note.str());
}

double idealized_rate(const BitSequence& x, const ExperimentConfig& cfg, double* seconds) {
    const auto t0 = std::chrono::steady_clock::now();
    IdealizedEncoder enc(x, cfg.budget(), cfg.source(),
                         IdealizedOptions{LevelConfig{cfg.ell, x.size(), cfg.delta}, std::nullopt});
    enc.run();
    const auto t1 = std::chrono::steady_clock::now();
    if (seconds) *seconds = std::chrono::duration<double>(t1 - t0).count();
    return static_cast<double>(enc.payload().size()) / static_cast<double>(x.size());
}

std::vector<RateRow> rate_sweep(const ExperimentConfig& cfg) {
    const double p = cfg.p.value();
    const double d = cfg.distortion.value();
    const double rd = rate_distortion(p, d);
    std::vector<RateRow> rows;
    for (std::uint64_t n : cfg.n_values) {
        auto cells = run_trials<RateRow>(cfg.trials, cfg.threads, [&](std::uint64_t i) {
            const std::uint64_t seed = cfg.seed + i;
            CounterRng rng(seed);
            const BitSequence x = bernoulli_sequence(n, p, rng);
            const auto t0 = std::chrono::steady_clock::now();
            IdealizedEncoder enc(x, cfg.budget(), cfg.source(),
                                 IdealizedOptions{LevelConfig{cfg.ell, n, cfg.delta}, std::nullopt});
            enc.run();
            const auto t1 = std::chrono::steady_clock::now();
            RateRow r;
            r.n = n;
            r.distortion = d;
            r.p = p;
            r.seed = static_cast<std::int64_t>(seed);
            r.rate = static_cast<double>(enc.payload().size()) / static_cast<double>(n);
            r.rd = rd;
            r.gap = r.rate - rd;
            r.escapes = static_cast<double>(enc.stats().escapes);
            r.giveups = static_cast<double>(enc.stats().give_ups);
            r.runtime = std::chrono::duration<double>(t1 - t0).count();
            return r;
        });
        RateRow mean;
        mean.n = n;
        mean.distortion = d;
        mean.p = p;
        mean.seed = -1;
        mean.rd = rd;
        for (const auto& r : cells) {
            mean.rate += r.rate;
            mean.escapes += r.escapes;
            mean.giveups += r.giveups;
            mean.runtime += r.runtime;
        }
        const auto k = static_cast<double>(cells.size());
        mean.rate /= k;
        mean.escapes /= k;
        mean.giveups /= k;
        mean.runtime /= k;
        mean.gap = mean.rate - rd;
        rows.insert(rows.end(), cells.begin(), cells.end());
        rows.push_back(mean);
    }
    return rows;
}

void write_reports_csv(std::ostream& out, const std::vector<LemmaReport>& reports) {
    out << "check,cell,estimate,bound,samples,std_error,comparison,pass,note\n";
    for (const auto& r : reports) {
        const char* cmp = r.comparison == Comparison::AtMost    ? "at_most"
                          : r.comparison == Comparison::AtLeast ? "at_least"
                                                                : "equal";
        out << r.lemma << ',' << r.cell << ',' << r.estimate << ',' << r.bound << ',' << r.samples << ','
            << r.std_error << ',' << cmp << ',' << (r.pass ? "pass" : "fail") << ",\"" << r.note << "\"\n";
    }
}

void write_rate_csv(std::ostream& out, const std::vector<RateRow>& rows) {
    out << "n,D,p,seed,rate,R(D),gap,escapes,giveups,runtime\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.distortion << ',' << r.p << ',';
        if (r.aggregate())
            out << "mean";
        else
            out << r.seed;
        out << ',' << r.rate << ',' << r.rd << ',' << r.gap << ',' << r.escapes << ',' << r.giveups << ','
            << r.runtime << '\n';
    }
}

std::vector<LemmaReport> run_checks(const ExperimentConfig& cfg) {
    cfg.validate();
    std::vector<LemmaReport> out;
    if (cfg.wants("match_count_mean")) out.push_back(check_match_count_mean(cfg));
    if (cfg.wants("match_count_second_moment")) out.push_back(check_match_count_second_moment(cfg));
    if (cfg.wants("coverage_probability")) out.push_back(check_coverage_probability(cfg));
    if (cfg.wants("symmetry")) out.push_back(check_symmetry(cfg));
    if (cfg.wants("cycle_lemma")) out.push_back(check_cycle_lemma(cfg));
    if (cfg.wants("frontier_growth")) out.push_back(check_frontier_growth(cfg));
    if (cfg.wants("short_phrases")) {
        try {
            out.push_back(check_short_phrases(cfg));
        } catch (const ZeroRate&) {
            if (!cfg.wants("all") || std::find(cfg.checks.begin(), cfg.checks.end(), "short_phrases") != cfg.checks.end())
                throw;
        }
    }
    if (cfg.wants("ball_intersection")) out.push_back(check_ball_intersection(cfg));
    if (cfg.wants("random_codebook_baseline")) out.push_back(random_codebook_baseline(cfg));
    return out;
}

} // namespace clp
