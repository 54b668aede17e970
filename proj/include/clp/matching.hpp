#pragma once

#include "clp/bit_sequence.hpp"
#include "clp/types.hpp"

#include <cstdint>

namespace clp {

/// How a codelet y is allowed to represent an equal-length phrase x.
enum class MatchRelation : std::uint8_t {
    FullCodelet = 0,  ///< d(x, y) <= D * length
    PrefixWise = 1,   ///< d(x[1..l], y[1..l]) <= D * l for every l
};

const char* to_string(MatchRelation r);

bool matches_full(const BitSequence& x, const BitSequence& y, const DistortionBudget& dist);
bool matches_prefixwise(const BitSequence& x, const BitSequence& y, const DistortionBudget& dist);
bool matches(MatchRelation rel, const BitSequence& x, const BitSequence& y,
             const DistortionBudget& dist);

/// P(d(X, y) <= D * L) for X i.i.d. Bernoulli(p), by summing over the number
/// of flips on the ones and on the zeros of y separately.
double ball_probability(const BitSequence& y, const DistortionBudget& dist, const SourceModel& src);
double ball_probability(std::uint64_t ones, std::uint64_t length, const DistortionBudget& dist,
                        double p);

/// P(X ~ y) under the prefix-wise relation, by dynamic programming over
/// (position, mismatches so far) with states above floor(D * l) dropped.
double match_probability(const BitSequence& y, const DistortionBudget& dist, const SourceModel& src);
double match_probability(const BitSequence& y, const DistortionBudget& dist, double p);

/// (1 - D/2)^2 / L * P(B(y, D)) where L is the length of y.
double cycle_lemma_lower_bound(const BitSequence& y, const DistortionBudget& dist,
                               const SourceModel& src);

TypeFraction type_of(const BitSequence& v);

/// Length-L string with round(q * L) ones spread as evenly as possible
/// (the i-th bit is 1 when floor(i k / L) steps up).
BitSequence canonical_sequence(std::uint64_t length, double q);

} // namespace clp
