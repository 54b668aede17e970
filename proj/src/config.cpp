#include "clp/harness.hpp"

#include "clp/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace clp {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
    std::vector<std::string_view> out;
    while (!s.empty()) {
        const auto comma = s.find(',');
        const auto item = trim(s.substr(0, comma));
        if (!item.empty()) out.push_back(item);
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

std::uint64_t to_uint(std::string_view key, std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw InvalidArgument("config key '" + std::string(key) + "': bad integer '" + std::string(s) + "'");
    return v;
}

// Accepts plain integers and powers of two written as 2^k.
std::uint64_t to_length(std::string_view key, std::string_view s) {
    if (s.starts_with("2^")) {
        const auto k = to_uint(key, s.substr(2));
        if (k > 62) throw InvalidArgument("config key '" + std::string(key) + "': exponent too large");
        return std::uint64_t{1} << k;
    }
    return to_uint(key, s);
}

double to_double(std::string_view key, std::string_view s) {
    try {
        std::size_t used = 0;
        const double v = std::stod(std::string(s), &used);
        if (used != s.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw InvalidArgument("config key '" + std::string(key) + "': bad number '" + std::string(s) + "'");
    }
}

} // namespace

bool ExperimentConfig::wants(std::string_view check) const {
    for (const auto& c : checks)
        if (c == check || c == "all") return true;
    return false;
}

void ExperimentConfig::validate() const {
    if (trials < 1) throw InvalidArgument("trials must be at least 1");
    if (ell < 1) throw InvalidArgument("ell must be at least 1");
    if (ell > 16) throw InvalidArgument("ell above 16 is not supported");
    if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("delta must lie in (0, 1)");
    if (p.den == 0 || p.num > p.den) throw InvalidArgument("p must lie in [0, 1]");
    (void)budget();
    for (auto n : n_values)
        if (n == 0) throw InvalidArgument("n values must be positive");
    if (length < 1) throw InvalidArgument("length must be at least 1");
}

ExperimentConfig parse_config(std::string_view text) {
    ExperimentConfig cfg;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw InvalidArgument("config line " + std::to_string(line_no) + ": expected key = value");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));

        if (key == "p") {
            cfg.p = Rational::parse(value);
        } else if (key == "distortion" || key == "D") {
            cfg.distortion = Rational::parse(value);
        } else if (key == "ell") {
            cfg.ell = static_cast<unsigned>(to_uint(key, value));
        } else if (key == "delta") {
            cfg.delta = to_double(key, value);
        } else if (key == "n") {
            cfg.n_values.clear();
            for (auto item : split_list(value)) cfg.n_values.push_back(to_length(key, item));
        } else if (key == "trials") {
            cfg.trials = to_uint(key, value);
        } else if (key == "seed") {
            cfg.seed = to_uint(key, value);
        } else if (key == "output") {
            cfg.output = std::string(value);
        } else if (key == "checks") {
            cfg.checks.clear();
            for (auto item : split_list(value)) cfg.checks.emplace_back(item);
        } else if (key == "length") {
            cfg.length = static_cast<unsigned>(to_uint(key, value));
        } else if (key == "builder_n") {
            cfg.builder_n = to_length(key, value);
        } else if (key == "codebook_size") {
            cfg.codebook_size = to_uint(key, value);
        } else if (key == "threads") {
            cfg.threads = static_cast<unsigned>(to_uint(key, value));
        } else {
            throw InvalidArgument("config line " + std::to_string(line_no) + ": unknown key '" +
                                  std::string(key) + "'");
        }
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

} // namespace clp
