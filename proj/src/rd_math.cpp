#include "clp/rd_math.hpp"

#include "clp/errors.hpp"

#include <algorithm>
#include <cmath>

namespace clp {

namespace {

// Slack for the closed feasibility constraint |p - q| <= D when the three
// inputs come from independently rounded ratios.
constexpr double kFeasibilitySlack = 1e-12;

double plogp_ratio(double cell, double px, double py) {
    if (cell <= 0.0) return 0.0;
    return cell * std::log2(cell / (px * py));
}

} // namespace

bool BinaryJoint::valid(double tol) const {
    return p >= -tol && p <= 1 + tol && q >= -tol && q <= 1 + tol && p11() >= -tol &&
           p10() >= -tol && p01() >= -tol && p00() >= -tol;
}

double binary_entropy(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return -t * std::log2(t) - (1.0 - t) * std::log2(1.0 - t);
}

double mutual_information(const BinaryJoint& j) {
    const double px1 = j.p, px0 = 1.0 - j.p;
    const double py1 = j.q, py0 = 1.0 - j.q;
    const double i = plogp_ratio(j.p11(), px1, py1) + plogp_ratio(j.p10(), px1, py0) +
                     plogp_ratio(j.p01(), px0, py1) + plogp_ratio(j.p00(), px0, py0);
    return std::max(0.0, i);
}

double rate_distortion(double p, double D) {
    if (D < std::min(p, 1.0 - p)) return binary_entropy(p) - binary_entropy(D);
    return 0.0;
}

std::optional<BinaryJoint> lower_mutual_info_joint(double q, double p, double D) {
    if (std::abs(p - q) > D + kFeasibilitySlack) return std::nullopt;
    // I(X;Y) is convex in a with its unconstrained minimum at independence.
    // The budget p + q - 2a <= D is a lower bound on a, so the optimum is the
    // larger of the two, kept inside the Frechet interval.
    const double lo = std::max(0.0, p + q - 1.0);
    const double hi = std::min(p, q);
    const double a = std::clamp(std::max(p * q, (p + q - D) / 2.0), lo, hi);
    return BinaryJoint{a, p, q};
}

std::optional<double> lower_mutual_info(double q, double p, double D) {
    auto j = lower_mutual_info_joint(q, p, D);
    if (!j) return std::nullopt;
    return mutual_information(*j);
}

double optimal_reproduction_type(double p, double D) {
    if (!(D < 0.5)) throw InvalidArgument("optimal reproduction type needs D < 1/2");
    return std::clamp((p - D) / (1.0 - 2.0 * D), 0.0, 1.0);
}

} // namespace clp
