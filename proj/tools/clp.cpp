#include "clp/codec.hpp"
#include "clp/errors.hpp"
#include "clp/harness.hpp"
#include "clp/rd_math.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kCorrupt = 2, kCheckFailed = 3 };

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw clp::InvalidArgument("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw clp::InvalidArgument("cannot write " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

struct EncodeArgs {
    std::string in, out, distortion, p, variant = "practical";
    unsigned ell = 0;
    double delta = 0.01;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> bits;
};

int run_encode(const EncodeArgs& a) {
    const auto bytes = read_file(a.in);
    std::size_t n = bytes.size() * 8;
    if (a.bits) {
        if (*a.bits > n) throw clp::InvalidArgument("--bits exceeds the input size");
        n = *a.bits;
    }
    const clp::BitSequence x = clp::BitSequence::from_bytes(bytes, n);
    const clp::DistortionBudget dist(clp::Rational::parse(a.distortion));
    std::optional<clp::SourceModel> src;
    if (!a.p.empty()) src = clp::SourceModel{clp::Rational::parse(a.p)};

    clp::EncodedStream stream;
    if (a.variant == "practical") {
        stream = clp::encode_practical(x, dist, src).stream;
    } else if (a.variant == "idealized") {
        clp::LevelConfig cfg{a.ell ? a.ell : clp::LevelConfig::default_ell(n), n, a.delta};
        stream = clp::encode_idealized(x, dist, src, clp::IdealizedOptions{cfg, a.seed}).stream;
    } else {
        throw clp::InvalidArgument("unknown variant '" + a.variant + "'");
    }
    write_file(a.out, stream.to_bytes());
    std::cerr << "n=" << n << " payload_bits=" << stream.payload.size() << " rate=" << std::setprecision(6)
              << (n ? clp::coding_rate(stream) : 0.0) << '\n';
    return kOk;
}

int run_decode(const std::string& in, const std::string& out) {
    const auto bytes = read_file(in);
    const clp::BitSequence y = clp::decode(bytes);
    write_file(out, y.to_bytes());
    std::cerr << "n=" << y.size() << '\n';
    return kOk;
}

int run_rd(const std::string& p_text, const std::string& d_text) {
    const double p = clp::Rational::parse(p_text).value();
    const clp::DistortionBudget dist(clp::Rational::parse(d_text));
    const double d = dist.value();
    std::cout << std::setprecision(10);
    std::cout << "R(D) = " << clp::rate_distortion(p, d) << '\n';
    if (d < 0.5)
        std::cout << "q* = " << clp::optimal_reproduction_type(p, d) << '\n';
    else
        std::cout << "q* = any\n";
    std::cout << "q,I_m\n";
    for (int i = 0; i <= 20; ++i) {
        const double q = i / 20.0;
        const auto im = clp::lower_mutual_info(q, p, d);
        std::cout << q << ',';
        if (im)
            std::cout << *im;
        else
            std::cout << "infeasible";
        std::cout << '\n';
    }
    return kOk;
}

int run_analyze(const std::string& check, const std::string& config, const std::string& out_path) {
    clp::ExperimentConfig cfg = config.empty() ? clp::ExperimentConfig{} : clp::load_config(config);
    if (!check.empty()) cfg.checks = {check};
    cfg.validate();
    const std::string path = out_path.empty() ? cfg.output : out_path;

    std::ofstream file;
    if (!path.empty()) {
        file.open(path);
        if (!file) throw clp::InvalidArgument("cannot write " + path);
    }
    std::ostream& out = path.empty() ? std::cout : file;

    if (cfg.checks.size() == 1 && cfg.checks.front() == "rate_sweep") {
        clp::write_rate_csv(out, clp::rate_sweep(cfg));
        return kOk;
    }
    const auto reports = clp::run_checks(cfg);
    if (reports.empty()) throw clp::InvalidArgument("no known check selected");
    clp::write_reports_csv(out, reports);
    bool ok = true;
    for (const auto& r : reports) {
        std::cerr << (r.pass ? "PASS " : "FAIL ") << r.lemma << ' ' << r.cell << '\n';
        ok = ok && r.pass;
    }
    return ok ? kOk : kCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Codelet parsing lossy compressor"};
    app.require_subcommand(1);

    EncodeArgs enc;
    auto* encode = app.add_subcommand("encode", "Compress a file");
    encode->add_option("--in", enc.in, "Input file (bits read MSB first)")->required();
    encode->add_option("--out", enc.out, "Output stream")->required();
    encode->add_option("--distortion", enc.distortion, "Distortion budget, e.g. 11/100")->required();
    encode->add_option("--p", enc.p, "Source parameter; omit if unknown");
    encode->add_option("--variant", enc.variant, "practical or idealized")
        ->check(CLI::IsMember({"practical", "idealized"}));
    encode->add_option("--ell", enc.ell, "Level width (idealized)");
    encode->add_option("--delta", enc.delta, "Frontier give-up parameter (idealized)");
    encode->add_option("--seed", enc.seed, "Random tie-breaking seed (idealized)");
    encode->add_option("--bits", enc.bits, "Use only the first N bits of the input");

    std::string dec_in, dec_out;
    auto* decode = app.add_subcommand("decode", "Reconstruct from a stream");
    decode->add_option("--in", dec_in)->required();
    decode->add_option("--out", dec_out)->required();

    std::string rd_p, rd_d;
    auto* rd = app.add_subcommand("rd", "Rate-distortion quantities");
    rd->add_option("--p", rd_p)->required();
    rd->add_option("--distortion", rd_d)->required();

    std::string check, config, csv;
    auto* analyze = app.add_subcommand("analyze", "Run lemma checks or the rate sweep");
    analyze->add_option("--check", check, "Check name, rate_sweep, or all");
    analyze->add_option("--config", config, "key = value configuration file");
    analyze->add_option("--out", csv, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*encode) return run_encode(enc);
        if (*decode) return run_decode(dec_in, dec_out);
        if (*rd) return run_rd(rd_p, rd_d);
        if (*analyze) return run_analyze(check, config, csv);
    } catch (const clp::StreamError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCorrupt;
    } catch (const clp::ZeroRate& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
