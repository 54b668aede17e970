#include "clp/errors.hpp"
#include "clp/rd_math.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace clp;

namespace {

double entropy_nat(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return (-t * std::log(t) - (1 - t) * std::log1p(-t)) / std::log(2.0);
}

} // namespace

TEST(BinaryEntropy, KnownValues) {
    EXPECT_EQ(binary_entropy(0.0), 0.0);
    EXPECT_EQ(binary_entropy(1.0), 0.0);
    EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
    EXPECT_NEAR(binary_entropy(0.11), 0.49992, 1e-5);
    for (double t = 0.01; t < 1.0; t += 0.01) EXPECT_NEAR(binary_entropy(t), entropy_nat(t), 1e-12);
}

TEST(MutualInformation, IndependenceIdentityAndHandSum) {
    EXPECT_NEAR(mutual_information({0.3 * 0.6, 0.3, 0.6}), 0.0, 1e-12);
    EXPECT_NEAR(mutual_information({0.3, 0.3, 0.3}), binary_entropy(0.3), 1e-12);
    // a = 0.45, p = q = 0.5: cells 0.45, 0.05, 0.05, 0.45 against 0.25 each.
    const double hand = 2 * 0.45 * std::log2(0.45 / 0.25) + 2 * 0.05 * std::log2(0.05 / 0.25);
    EXPECT_NEAR(mutual_information({0.45, 0.5, 0.5}), hand, 1e-12);
    EXPECT_GT(mutual_information({0.2, 0.5, 0.5}), 0.0);
}

TEST(RateDistortion, ClosedFormCases) {
    EXPECT_DOUBLE_EQ(rate_distortion(0.5, 0.0), 1.0);
    EXPECT_EQ(rate_distortion(0.5, 0.5), 0.0);
    EXPECT_NEAR(rate_distortion(0.5, 0.11), 0.50008, 1e-4);
    EXPECT_EQ(rate_distortion(0.2, 0.2), 0.0);
    EXPECT_DOUBLE_EQ(rate_distortion(0.3, 0.0), binary_entropy(0.3));
    EXPECT_DOUBLE_EQ(rate_distortion(SourceModel{{1, 2}}, DistortionBudget(11, 100)), rate_distortion(0.5, 0.11));
}

TEST(RateDistortion, NonincreasingInDistortion) {
    for (double p : {0.1, 0.3, 0.5, 0.8}) {
        double prev = rate_distortion(p, 0.0);
        for (double d = 0.01; d <= 0.5; d += 0.01) {
            const double r = rate_distortion(p, d);
            EXPECT_LE(r, prev + 1e-15);
            prev = r;
        }
    }
}

TEST(LowerMutualInfo, SpecExamples) {
    EXPECT_NEAR(*lower_mutual_info(0.5, 0.5, 0.0), 1.0, 1e-12);
    EXPECT_NEAR(*lower_mutual_info(0.5, 0.5, 0.5), 0.0, 1e-12);
    EXPECT_FALSE(lower_mutual_info(0.9, 0.5, 0.1).has_value());
    // Edge |p - q| = D is feasible.
    EXPECT_TRUE(lower_mutual_info(0.6, 0.5, 0.1).has_value());
    EXPECT_TRUE(lower_mutual_info(1.0, 0.5, 0.5).has_value());
}

TEST(LowerMutualInfo, MatchesDenseGridOracle) {
    // One million grid points plus refinement for a few triples.
    for (auto [q, p, d] : {std::tuple{0.375, 0.4, 0.1}, {0.5, 0.5, 0.11}, {0.2, 0.3, 0.25}, {0.7, 0.65, 0.05}}) {
        const auto got = lower_mutual_info(q, p, d);
        const auto want = oracle::lower_mutual_info(q, p, d, 1000000);
        ASSERT_TRUE(got && want);
        EXPECT_NEAR(*got, *want, 1e-9) << q << ' ' << p << ' ' << d;
    }
}

TEST(LowerMutualInfo, OptimalTypeAttainsRate) {
    for (double p : {0.3, 0.4, 0.5})
        for (double d : {0.05, 0.1}) {
            const double q = optimal_reproduction_type(p, d);
            EXPECT_NEAR(*oracle::lower_mutual_info(q, p, d, 100000), rate_distortion(p, d), 1e-6);
            EXPECT_NEAR(*lower_mutual_info(q, p, d), rate_distortion(p, d), 1e-9);
        }
}

TEST(LowerMutualInfo, ConvexInQ) {
    for (double p : {0.2, 0.5})
        for (double d : {0.05, 0.2}) {
            const double lo = std::max(0.0, p - d), hi = std::min(1.0, p + d);
            for (int i = 0; i <= 20; ++i)
                for (int j = 0; j <= 20; ++j)
                    for (double lam : {0.25, 0.5, 0.75}) {
                        const double q1 = lo + (hi - lo) * i / 20, q2 = lo + (hi - lo) * j / 20;
                        const double mid = *lower_mutual_info(lam * q1 + (1 - lam) * q2, p, d);
                        const double chord =
                            lam * *lower_mutual_info(q1, p, d) + (1 - lam) * *lower_mutual_info(q2, p, d);
                        EXPECT_LE(mid, chord + 1e-9);
                    }
        }
}

TEST(LowerMutualInfo, MinimumOverFineGridSitsAtOptimalType) {
    for (double p : {0.3, 0.45, 0.5, 0.7})
        for (double d : {0.05, 0.1, 0.2}) {
            double best = INFINITY, arg = -1;
            for (int i = 0; i <= 1000; ++i) {
                const double q = i / 1000.0;
                if (auto v = lower_mutual_info(q, p, d); v && *v < best) {
                    best = *v;
                    arg = q;
                }
            }
            EXPECT_NEAR(arg, optimal_reproduction_type(p, d), 2e-3);
            EXPECT_NEAR(best, rate_distortion(p, d), 1e-6);
        }
}

TEST(LowerMutualInfo, JointIsValidAndMeetsBudget) {
    for (double p = 0.05; p < 1; p += 0.1)
        for (double q = 0.05; q < 1; q += 0.1)
            for (double d = 0.0; d <= 0.5; d += 0.05) {
                auto j = lower_mutual_info_joint(q, p, d);
                if (!j) {
                    EXPECT_GT(std::abs(p - q), d);
                    continue;
                }
                EXPECT_TRUE(j->valid(1e-12));
                EXPECT_LE(j->distortion(), d + 1e-12);
            }
}

TEST(OptimalReproductionType, ValuesAndClamp) {
    EXPECT_DOUBLE_EQ(optimal_reproduction_type(0.5, 0.3), 0.5);
    EXPECT_NEAR(optimal_reproduction_type(0.4, 0.1), 0.375, 1e-15);
    EXPECT_EQ(optimal_reproduction_type(0.05, 0.1), 0.0);
    EXPECT_EQ(optimal_reproduction_type(0.95, 0.1), 1.0);
    EXPECT_THROW(optimal_reproduction_type(0.5, 0.5), InvalidArgument);
    EXPECT_NEAR(oracle::argmin_q(0.4, 0.1), 0.375, 2e-3);
}
