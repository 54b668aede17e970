#pragma once

// Monte Carlo and exhaustive checks of the probabilistic lemmas behind the
// idealized construction, plus the rate sweep.

#include "clp/codec.hpp"
#include "clp/rng.hpp"
#include "clp/types.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace clp {

struct ExperimentConfig {
    Rational p{1, 2};
    Rational distortion{1, 4};
    unsigned ell = 2;
    double delta = 0.01;
    std::vector<std::uint64_t> n_values{1u << 14, 1u << 16, 1u << 18};
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    std::string output;
    std::vector<std::string> checks{"all"};

    /// Codelet length L examined by the level checks (a multiple of ell).
    unsigned length = 4;
    /// Most source bits the idealized builder may consume while filling a level.
    std::uint64_t builder_n = 4096;
    /// Codebook size for random_codebook_baseline.
    std::uint64_t codebook_size = 3;
    /// Worker threads for independent trials; 0 = hardware concurrency.
    unsigned threads = 0;

    DistortionBudget budget() const { return DistortionBudget(distortion); }
    SourceModel source() const { return SourceModel{p}; }
    bool wants(std::string_view check) const;
    /// Throws InvalidArgument when a field is out of range.
    void validate() const;
};

/// Flat `key = value` lines; `#` starts a comment. Keys: p, distortion (or D),
/// ell, delta, n (comma separated), trials, seed, output, checks, length,
/// builder_n, codebook_size, threads.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string& path);

enum class Comparison {
    AtMost,   ///< estimate <= bound + slack
    AtLeast,  ///< estimate >= bound - slack
    Equal,    ///< |estimate - bound| <= slack
};

struct LemmaReport {
    std::string lemma;
    std::string cell;
    double estimate = 0.0;
    double bound = 0.0;
    std::uint64_t samples = 1;
    double std_error = 0.0;
    Comparison comparison = Comparison::AtMost;
    double slack_sigmas = 3.0;
    bool pass = false;
    std::string note;

    /// Verdict recomputed from the stored numbers.
    bool verdict() const;
    bool consistent() const { return pass == verdict(); }
};

LemmaReport make_report(std::string lemma, std::string cell, double estimate, double bound,
                        std::uint64_t samples, double std_error, Comparison cmp,
                        std::string note = {});

/// Runs `trial(i)` for i in [0, count), possibly on several threads, and
/// returns the results in index order.
template <typename T>
std::vector<T> run_trials(std::uint64_t count, unsigned threads,
                          const std::function<T(std::uint64_t)>& trial) {
    std::vector<T> out(count);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads <= 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i) out[i] = trial(i);
        return out;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::uint64_t i = t; i < count; i += threads) out[i] = trial(i);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

/// Live codelets at depth `length` once the idealized builder has filled that
/// level, or has used up `builder_n` source bits drawn from `rng`.
std::vector<BitSequence> build_level(const ExperimentConfig& cfg, CounterRng rng);

/// Capacity-limited level size min(M_L, cap_{L-ell} 2^ell).
std::uint64_t effective_level_size(const ExperimentConfig& cfg, unsigned length);

LemmaReport check_match_count_mean(const ExperimentConfig& cfg);
LemmaReport check_match_count_second_moment(const ExperimentConfig& cfg);
LemmaReport check_coverage_probability(const ExperimentConfig& cfg);
LemmaReport check_symmetry(const ExperimentConfig& cfg);
LemmaReport check_cycle_lemma(const ExperimentConfig& cfg);
std::vector<LemmaReport> check_cycle_lemma_sweep(const std::vector<unsigned>& lengths,
                                                 const std::vector<Rational>& ps,
                                                 const std::vector<Rational>& distortions);
LemmaReport check_frontier_growth(const ExperimentConfig& cfg);
/// Throws ZeroRate when R(D) = 0.
LemmaReport check_short_phrases(const ExperimentConfig& cfg);
LemmaReport check_ball_intersection(const ExperimentConfig& cfg);
LemmaReport random_codebook_baseline(const ExperimentConfig& cfg);

struct RateRow {
    std::uint64_t n = 0;
    double distortion = 0.0;
    double p = 0.0;
    /// Trial seed, or -1 for the per-n aggregate row.
    std::int64_t seed = 0;
    double rate = 0.0;
    double rd = 0.0;
    double gap = 0.0;
    double escapes = 0.0;
    double giveups = 0.0;
    double runtime = 0.0;
    bool aggregate() const { return seed < 0; }
};

/// One row per (n, seed) followed by a mean row for each n.
std::vector<RateRow> rate_sweep(const ExperimentConfig& cfg);

/// Encodes with the idealized variant and returns the payload rate.
double idealized_rate(const BitSequence& x, const ExperimentConfig& cfg, double* seconds = nullptr);

BitSequence bernoulli_sequence(std::uint64_t n, double p, CounterRng& rng);

void write_reports_csv(std::ostream& out, const std::vector<LemmaReport>& reports);
void write_rate_csv(std::ostream& out, const std::vector<RateRow>& rows);

/// Runs every check named in cfg.checks ("all" selects the lemma checks).
std::vector<LemmaReport> run_checks(const ExperimentConfig& cfg);

} // namespace clp
