#pragma once

// Information-theoretic quantities for a Bernoulli source under Hamming
// distortion. All logarithms are base 2.

#include "clp/types.hpp"

#include <optional>

namespace clp {

/// Joint law of a bit pair (Y, X) with P(X=1) = p, P(Y=1) = q and
/// P(X=1, Y=1) = a. The remaining three cells follow from the marginals.
struct BinaryJoint {
    double a = 0.0;
    double p = 0.0;
    double q = 0.0;

    double p11() const { return a; }
    double p10() const { return p - a; }  // X=1, Y=0
    double p01() const { return q - a; }  // X=0, Y=1
    double p00() const { return 1.0 - p - q + a; }

    /// Expected Hamming distortion P(X != Y).
    double distortion() const { return p + q - 2.0 * a; }

    /// Frechet bounds hold (all cells nonnegative) up to `tol`.
    bool valid(double tol = 1e-12) const;
};

/// -t log t - (1-t) log(1-t), with 0 log 0 = 0.
double binary_entropy(double t);

double mutual_information(const BinaryJoint& j);

/// R(p, D) = h(p) - h(D) for D < min(p, 1-p), 0 otherwise.
double rate_distortion(double p, double D);
inline double rate_distortion(const SourceModel& src, const DistortionBudget& dist) {
    return rate_distortion(src.value(), dist.value());
}

/// Minimum of I(X;Y) over joints with X ~ p, Y ~ q and P(X != Y) <= D.
/// Returns nullopt when |p - q| > D: no such joint exists, so a type-q word
/// cannot cover a type-p string within the budget. The edge |p - q| = D is feasible.
std::optional<double> lower_mutual_info(double q, double p, double D);
inline std::optional<double> lower_mutual_info(double q, const SourceModel& src,
                                               const DistortionBudget& dist) {
    return lower_mutual_info(q, src.value(), dist.value());
}

/// The joint attaining lower_mutual_info, or nullopt when infeasible.
std::optional<BinaryJoint> lower_mutual_info_joint(double q, double p, double D);

/// (p - D) / (1 - 2D) clamped into [0, 1]. Requires D < 1/2.
double optimal_reproduction_type(double p, double D);
inline double optimal_reproduction_type(const SourceModel& src, const DistortionBudget& dist) {
    return optimal_reproduction_type(src.value(), dist.value());
}

} // namespace clp
