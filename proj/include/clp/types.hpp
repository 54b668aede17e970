#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace clp {

struct Rational {
    std::uint32_t num = 0;
    std::uint32_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    // Accepts "N/D", "N" or a short decimal such as "0.11".
    static Rational parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Bernoulli source: P(X_i = 1) = p.
struct SourceModel {
    Rational p{1, 2};

    double value() const { return p.value(); }
};

/// Target fraction of flipped bits, kept as an exact ratio so that boundary
/// cases (one flip in two bits at D = 1/2) compare without rounding.
struct DistortionBudget {
    std::uint32_t num = 0;
    std::uint32_t den = 1;

    DistortionBudget() = default;
    DistortionBudget(std::uint32_t n, std::uint32_t d);
    explicit DistortionBudget(Rational r) : DistortionBudget(r.num, r.den) {}

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    /// mismatches <= D * length, evaluated exactly.
    bool allows(std::uint64_t mismatches, std::uint64_t length) const {
        return mismatches * den <= static_cast<std::uint64_t>(num) * length;
    }

    /// floor(D * length)
    std::uint64_t max_mismatches(std::uint64_t length) const {
        return static_cast<std::uint64_t>(num) * length / den;
    }

    bool is_zero() const { return num == 0; }

    friend bool operator==(const DistortionBudget&, const DistortionBudget&) = default;
};

/// Empirical type of a string: ones / length.
struct TypeFraction {
    std::uint64_t ones = 0;
    std::uint64_t length = 1;

    double value() const { return static_cast<double>(ones) / static_cast<double>(length); }
};

} // namespace clp
