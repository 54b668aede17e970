#include "clp/matching.hpp"

#include "clp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace clp {

const char* to_string(MatchRelation r) {
    return r == MatchRelation::FullCodelet ? "full" : "prefixwise";
}

bool matches_full(const BitSequence& x, const BitSequence& y, const DistortionBudget& dist) {
    if (x.size() != y.size()) throw LengthMismatch(x.size(), y.size());
    return dist.allows(hamming_distance(x, y), x.size());
}

bool matches_prefixwise(const BitSequence& x, const BitSequence& y, const DistortionBudget& dist) {
    if (x.size() != y.size()) throw LengthMismatch(x.size(), y.size());
    std::uint64_t m = 0;
    for (std::size_t l = 0; l < x.size(); ++l) {
        m += x[l] != y[l];
        if (!dist.allows(m, l + 1)) return false;
    }
    return true;
}

bool matches(MatchRelation rel, const BitSequence& x, const BitSequence& y,
             const DistortionBudget& dist) {
    return rel == MatchRelation::PrefixWise ? matches_prefixwise(x, y, dist)
                                            : matches_full(x, y, dist);
}

namespace {

double log_choose(std::uint64_t n, std::uint64_t k) {
    return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
           std::lgamma(static_cast<double>(n - k) + 1);
}

double xlogy(double x, double y) { return x == 0.0 ? 0.0 : x * std::log(y); }

constexpr std::uint64_t kExactBallLength = 1024;

// Binomial(n, t) probabilities by repeated convolution, exact for dyadic t at small n.
std::vector<double> binomial_pmf(std::uint64_t n, double t) {
    std::vector<double> pmf(n + 1, 0.0);
    pmf[0] = 1.0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        for (std::uint64_t m = k; m > 0; --m) pmf[m] = pmf[m] * (1.0 - t) + pmf[m - 1] * t;
        pmf[0] *= 1.0 - t;
    }
    return pmf;
}

} // namespace

double ball_probability(std::uint64_t ones, std::uint64_t length, const DistortionBudget& dist,
                        double p) {
    const std::uint64_t zeros = length - ones;
    const std::uint64_t radius = dist.max_mismatches(length);
    if (length <= kExactBallLength) {
        // Flip counts among the ones (prob 1 - p each) and among the zeros (prob p each).
        const auto a = binomial_pmf(ones, 1.0 - p);
        const auto b = binomial_pmf(zeros, p);
        double total = 0.0;
        for (std::uint64_t i = 0; i <= ones && i <= radius; ++i) {
            double inner = 0.0;
            for (std::uint64_t j = 0; j <= zeros && i + j <= radius; ++j) inner += b[j];
            total += a[i] * inner;
        }
        return std::min(total, 1.0);
    }
    double total = 0.0;
    for (std::uint64_t i = 0; i <= ones && i <= radius; ++i) {
        for (std::uint64_t j = 0; j <= zeros && i + j <= radius; ++j) {
            const double x_ones = static_cast<double>(ones - i + j);
            const double x_zeros = static_cast<double>(length) - x_ones;
            if (p <= 0.0 && x_ones > 0) continue;
            if (p >= 1.0 && x_zeros > 0) continue;
            total += std::exp(log_choose(ones, i) + log_choose(zeros, j) + xlogy(x_ones, p) +
                              xlogy(x_zeros, 1.0 - p));
        }
    }
    return std::min(total, 1.0);
}

double ball_probability(const BitSequence& y, const DistortionBudget& dist, const SourceModel& src) {
    return ball_probability(y.count_ones(), y.size(), dist, src.value());
}

double match_probability(const BitSequence& y, const DistortionBudget& dist, double p) {
    const std::size_t L = y.size();
    // mass[m] = P(first l symbols matched prefix-wise with m mismatches)
    std::vector<double> mass(L + 2, 0.0), next(L + 2, 0.0);
    mass[0] = 1.0;
    std::size_t top = 0;  // highest reachable mismatch count
    for (std::size_t l = 0; l < L; ++l) {
        const double miss = y[l] ? 1.0 - p : p;
        const std::size_t cap = dist.max_mismatches(l + 1);
        std::fill(next.begin(), next.begin() + static_cast<std::ptrdiff_t>(top + 2), 0.0);
        for (std::size_t m = 0; m <= top; ++m) {
            if (mass[m] == 0.0) continue;
            next[m] += mass[m] * (1.0 - miss);
            if (m + 1 <= cap) next[m + 1] += mass[m] * miss;
        }
        top = std::min(top + 1, cap);
        std::swap(mass, next);
    }
    double total = 0.0;
    for (std::size_t m = 0; m <= top; ++m) total += mass[m];
    return total;
}

double match_probability(const BitSequence& y, const DistortionBudget& dist, const SourceModel& src) {
    return match_probability(y, dist, src.value());
}

double cycle_lemma_lower_bound(const BitSequence& y, const DistortionBudget& dist,
                               const SourceModel& src) {
    const double f = 1.0 - dist.value() / 2.0;
    return f * f / static_cast<double>(y.size()) * ball_probability(y, dist, src);
}

TypeFraction type_of(const BitSequence& v) {
    if (v.empty()) throw InvalidArgument("type of an empty sequence");
    return {v.count_ones(), v.size()};
}

BitSequence canonical_sequence(std::uint64_t length, double q) {
    // Ones up to position i: round(q i) with ties rounded down, so every
    // prefix is itself canonical.
    auto ones = [q](std::uint64_t i) {
        return static_cast<std::uint64_t>(std::max(0.0, std::ceil(q * static_cast<double>(i) - 0.5 - 1e-9)));
    };
    BitSequence y(length);
    for (std::uint64_t i = 1; i <= length; ++i)
        if (ones(i) != ones(i - 1)) y.set(i - 1, true);
    return y;
}

} // namespace clp
