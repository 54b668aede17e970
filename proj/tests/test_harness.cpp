#include "clp/errors.hpp"
#include "clp/harness.hpp"
#include "clp/rd_math.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace clp;

namespace {

ExperimentConfig small_config() {
    ExperimentConfig cfg;
    cfg.trials = 300;
    cfg.threads = 1;
    return cfg;
}

std::size_t count_lines(const std::string& s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

} // namespace

TEST(Config, ParsesKeysCommentsAndPowers) {
    const auto cfg = parse_config(
        "# sweep\n"
        "p = 3/10\n"
        "D = 0.11  # budget\n"
        "ell = 3\n"
        "delta = 0.05\n"
        "n = 2^10, 4096\n"
        "trials = 50\n"
        "seed = 9\n"
        "checks = symmetry, cycle_lemma\n"
        "output = out.csv\n");
    EXPECT_EQ(cfg.p, (Rational{3, 10}));
    EXPECT_EQ(cfg.distortion, (Rational{11, 100}));
    EXPECT_EQ(cfg.ell, 3u);
    EXPECT_DOUBLE_EQ(cfg.delta, 0.05);
    EXPECT_EQ(cfg.n_values, (std::vector<std::uint64_t>{1024, 4096}));
    EXPECT_EQ(cfg.trials, 50u);
    EXPECT_EQ(cfg.seed, 9u);
    EXPECT_EQ(cfg.output, "out.csv");
    EXPECT_TRUE(cfg.wants("symmetry"));
    EXPECT_FALSE(cfg.wants("match_count_mean"));
}

TEST(Config, RejectsBadInput) {
    EXPECT_THROW(parse_config("colour = red\n"), InvalidArgument);
    EXPECT_THROW(parse_config("ell = 0\n"), InvalidArgument);
    EXPECT_THROW(parse_config("p = 3/2\n"), InvalidArgument);
    EXPECT_THROW(parse_config("trials\n"), InvalidArgument);
    EXPECT_THROW(load_config("/nonexistent/clp.cfg"), InvalidArgument);
}

TEST(Report, VerdictMatchesComparison) {
    auto r = make_report("x", "c", 1.0, 0.9, 100, 0.05, Comparison::AtMost);
    EXPECT_TRUE(r.pass);
    r = make_report("x", "c", 1.0, 0.8, 100, 0.05, Comparison::AtMost);
    EXPECT_FALSE(r.pass);
    r = make_report("x", "c", 0.8, 1.0, 100, 0.05, Comparison::AtLeast);
    EXPECT_FALSE(r.pass);
    r = make_report("x", "c", 0.9, 1.0, 100, 0.05, Comparison::Equal);
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(r.consistent());
    r.pass = false;
    EXPECT_FALSE(r.consistent());
}

TEST(RunTrials, IndexOrderedAcrossThreads) {
    const std::function<std::uint64_t(std::uint64_t)> sq = [](std::uint64_t i) { return i * i; };
    const auto a = run_trials<std::uint64_t>(100, 3, sq);
    const auto b = run_trials<std::uint64_t>(100, 1, sq);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a[7], 49u);
}

TEST(Bernoulli, EmpiricalFrequency) {
    CounterRng rng(3);
    const auto x = bernoulli_sequence(200000, 0.3, rng);
    EXPECT_NEAR(static_cast<double>(x.count_ones()) / x.size(), 0.3, 0.005);
    CounterRng rng2(3);
    const auto y = bernoulli_sequence(100000, 0.5, rng2);
    EXPECT_NEAR(static_cast<double>(y.count_ones()) / y.size(), 0.5, 0.005);
}

TEST(Levels, BuiltLevelRespectsCapacity) {
    auto cfg = small_config();
    const auto level = build_level(cfg, CounterRng(5));
    EXPECT_GT(level.size(), 0u);
    EXPECT_LE(level.size(), effective_level_size(cfg, cfg.length));
    for (const auto& c : level) EXPECT_EQ(c.size(), cfg.length);
}

TEST(Checks, SmallRunsProduceConsistentReports) {
    auto cfg = small_config();
    for (const auto& r : {check_match_count_mean(cfg), check_cycle_lemma(cfg), check_frontier_growth(cfg)}) {
        EXPECT_TRUE(r.consistent()) << r.lemma;
        EXPECT_TRUE(r.pass) << r.lemma << " " << r.cell << " " << r.note << ' ' << r.estimate << ' ' << r.bound;
        EXPECT_GT(r.samples, 0u);
    }
}

TEST(Checks, CycleSweepPasses) {
    for (const auto& r : check_cycle_lemma_sweep({2, 4, 6}, {{1, 2}, {3, 10}}, {{1, 10}, {1, 2}}))
        EXPECT_TRUE(r.pass) << r.cell;
}

TEST(Checks, ShortPhrasesNeedsPositiveRate) {
    auto cfg = small_config();
    const auto r = check_short_phrases(cfg);
    EXPECT_TRUE(r.consistent());
    EXPECT_GT(r.samples, 0u);
    cfg.distortion = {1, 2};
    EXPECT_THROW(check_short_phrases(cfg), ZeroRate);
}

TEST(Csv, ReportAndRateLayouts) {
    std::ostringstream a;
    write_reports_csv(a, {make_report("m", "c", 1, 2, 3, 0.1, Comparison::AtMost)});
    EXPECT_EQ(count_lines(a.str()), 2u);
    EXPECT_EQ(a.str().substr(0, 6), "check,");

    ExperimentConfig cfg;
    cfg.distortion = {11, 100};
    cfg.n_values = {4096};
    cfg.trials = 2;
    cfg.ell = 2;
    const auto rows = rate_sweep(cfg);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_TRUE(rows.back().aggregate());
    EXPECT_NEAR(rows.back().rate, (rows[0].rate + rows[1].rate) / 2, 1e-12);
    EXPECT_NEAR(rows[0].gap, rows[0].rate - rate_distortion(0.5, 0.11), 1e-12);
    std::ostringstream b;
    write_rate_csv(b, rows);
    EXPECT_EQ(count_lines(b.str()), 4u);
    EXPECT_EQ(b.str().substr(0, 2), "n,");
}
