#include "clp/types.hpp"

#include "clp/errors.hpp"

#include <charconv>
#include <numeric>

namespace clp {

namespace {

std::uint64_t parse_uint(std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw InvalidArgument("not an unsigned integer: '" + std::string(s) + "'");
    return v;
}

Rational reduced(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw InvalidArgument("zero denominator");
    const auto g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num > UINT32_MAX || den > UINT32_MAX) throw InvalidArgument("ratio out of range");
    return {static_cast<std::uint32_t>(num), static_cast<std::uint32_t>(den)};
}

} // namespace

Rational Rational::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos)
        return reduced(parse_uint(text.substr(0, slash)), parse_uint(text.substr(slash + 1)));
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        if (frac.size() > 9) throw InvalidArgument("too many decimals: '" + std::string(text) + "'");
        std::uint64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        const std::uint64_t w = whole.empty() ? 0 : parse_uint(whole);
        const std::uint64_t f = frac.empty() ? 0 : parse_uint(frac);
        return reduced(w * den + f, den);
    }
    return reduced(parse_uint(text), 1);
}

std::string Rational::to_string() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

DistortionBudget::DistortionBudget(std::uint32_t n, std::uint32_t d) : num(n), den(d) {
    if (d == 0) throw InvalidArgument("distortion denominator must be positive");
    if (2ull * n > d) throw InvalidArgument("distortion must lie in [0, 1/2]");
}

} // namespace clp
