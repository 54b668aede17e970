#pragma once

// Slow reference implementations used only by the tests. None of them call
// into the library code they are compared against.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

inline double xlogx(double t) { return t <= 0.0 ? 0.0 : t * std::log2(t); }

// I(X;Y) for the joint with P(X=1)=p, P(Y=1)=q, P(X=1,Y=1)=a.
inline double mutual_info(double a, double p, double q) {
    const double cells[4] = {a, p - a, q - a, 1.0 - p - q + a};
    double joint = 0.0;
    for (double c : cells) joint += xlogx(std::max(c, 0.0));
    const double hx = -xlogx(p) - xlogx(1.0 - p);
    const double hy = -xlogx(q) - xlogx(1.0 - q);
    return std::max(0.0, hx + hy + joint);
}

// Minimizes a convex function on [lo, hi]: coarse grid, then golden section
// inside the bracket around the best grid point.
inline std::pair<double, double> convex_min(const std::function<double(double)>& f, double lo, double hi,
                                            int grid = 256) {
    if (hi - lo <= 0.0) return {lo, f(lo)};
    int best = 0;
    double best_val = INFINITY;
    for (int i = 0; i <= grid; ++i) {
        const double v = f(lo + (hi - lo) * i / grid);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    double a = lo + (hi - lo) * std::max(0, best - 1) / grid;
    double b = lo + (hi - lo) * std::min(grid, best + 1) / grid;
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    const double x = (a + b) / 2.0;
    double v = f(x);
    double arg = x;
    for (double cand : {lo, hi, lo + (hi - lo) * best / grid}) {
        const double fv = f(cand);
        if (fv < v) {
            v = fv;
            arg = cand;
        }
    }
    return {arg, v};
}

// Minimum mutual information over joints with marginals (p, q) and
// P(X != Y) <= D, by direct search over the free cell a = P(X=1, Y=1).
inline std::optional<double> lower_mutual_info(double q, double p, double D, int grid = 256) {
    const double lo = std::max({0.0, p + q - 1.0, (p + q - D) / 2.0});
    const double hi = std::min(p, q);
    if (lo > hi + 1e-12) return std::nullopt;
    return convex_min([&](double a) { return mutual_info(a, p, q); }, lo, std::max(lo, hi), grid).second;
}

// R(p, D) as the minimum of the above over the reproduction marginal q.
inline double rate_distortion(double p, double D, int grid = 64) {
    const double lo = std::max(0.0, p - D);
    const double hi = std::min(1.0, p + D);
    return convex_min([&](double q) { return *lower_mutual_info(q, p, D, grid); }, lo, hi, grid).second;
}

inline double argmin_q(double p, double D, int grid = 128) {
    const double lo = std::max(0.0, p - D);
    const double hi = std::min(1.0, p + D);
    return convex_min([&](double q) { return *lower_mutual_info(q, p, D, grid); }, lo, hi, grid).first;
}

// Bit strings as std::string of '0'/'1'; masks hold symbol i in bit i.
inline std::string mask_string(std::uint32_t m, unsigned len) {
    std::string s(len, '0');
    for (unsigned i = 0; i < len; ++i)
        if ((m >> i) & 1u) s[i] = '1';
    return s;
}

// d(x', y') * den <= num * l for every prefix length l.
inline bool prefixwise(const std::string& x, const std::string& y, std::uint64_t num, std::uint64_t den) {
    std::uint64_t mism = 0;
    for (std::size_t l = 1; l <= x.size(); ++l) {
        mism += x[l - 1] != y[l - 1];
        if (mism * den > num * l) return false;
    }
    return true;
}

inline bool within(const std::string& x, const std::string& y, std::uint64_t num, std::uint64_t den) {
    std::uint64_t mism = 0;
    for (std::size_t i = 0; i < x.size(); ++i) mism += x[i] != y[i];
    return mism * den <= num * x.size();
}

inline double string_prob(const std::string& x, double p) {
    double w = 1.0;
    for (char c : x) w *= c == '1' ? p : 1.0 - p;
    return w;
}

// P(X ~ y) and P(X in B(y, D)) by summing over all 2^L strings.
inline double match_probability(const std::string& y, std::uint64_t num, std::uint64_t den, double p) {
    const auto len = static_cast<unsigned>(y.size());
    double s = 0.0;
    for (std::uint32_t m = 0; m < (1u << len); ++m) {
        const auto x = mask_string(m, len);
        if (prefixwise(x, y, num, den)) s += string_prob(x, p);
    }
    return s;
}

inline double ball_probability(const std::string& y, std::uint64_t num, std::uint64_t den, double p) {
    const auto len = static_cast<unsigned>(y.size());
    double s = 0.0;
    for (std::uint32_t m = 0; m < (1u << len); ++m) {
        const auto x = mask_string(m, len);
        if (within(x, y, num, den)) s += string_prob(x, p);
    }
    return s;
}

// Textbook LZ78 parse over strings: lengths of the phrases in order.
inline std::vector<std::size_t> lz78_phrase_lengths(const std::string& y) {
    std::map<std::string, int> dict;
    std::vector<std::size_t> out;
    std::string cur;
    for (char c : y) {
        cur.push_back(c);
        if (!dict.count(cur)) {
            dict[cur] = static_cast<int>(dict.size()) + 1;
            out.push_back(cur.size());
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(cur.size());
    return out;
}

} // namespace oracle
