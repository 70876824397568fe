// lcslab command-line front door: engines, oracles, calibration and the
// Monte Carlo experiment tables, emitted as CSV or JSON.
//
// CSV dialect: comma separator, '.' decimal point, LF line endings, a leading
// `# schema=...` line and a header row. Every experiment row embeds the seed
// so any published number can be regenerated.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcslab/lcslab.hpp"

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 1;  // documented default; no env override
constexpr const char* kSchemaVersion = "v1";

struct OutputOptions {
    std::string format = "csv";
    std::string out_path;  // empty = stdout
};

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

void emit(const OutputOptions& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + opts.out_path);
    out << text;
}

std::string schema_line(const std::string& command, std::uint64_t seed,
                        const std::string& engine) {
    std::ostringstream s;
    s << "# schema=lcslab." << command << "." << kSchemaVersion << " rng=v"
      << lcslab::kRngSchemeVersion << " seed=" << seed;
    if (!engine.empty()) s << " engine=" << engine;
    s << "\n";
    return s.str();
}

lcslab::BinarySequence load_sequence(const std::string& literal, const std::string& file,
                                     bool packed) {
    if (!file.empty()) {
        std::ifstream in(file, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open sequence file: " + file);
        if (packed) {
            std::uint64_t length = 0;
            std::uint8_t header[8];
            if (!in.read(reinterpret_cast<char*>(header), 8)) {
                throw std::runtime_error("packed sequence file too short: " + file);
            }
            for (int b = 7; b >= 0; --b) length = (length << 8) | header[b];
            std::vector<std::uint8_t> bytes((length + 7) / 8);
            if (!in.read(reinterpret_cast<char*>(bytes.data()),
                         static_cast<std::streamsize>(bytes.size()))) {
                throw std::runtime_error("packed sequence file truncated: " + file);
            }
            return lcslab::BinarySequence::from_packed_bytes(bytes, length);
        }
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
        return lcslab::BinarySequence::from_string(text);
    }
    return lcslab::BinarySequence::from_string(literal);
}

struct SequencePairArgs {
    std::string x_literal, y_literal;
    std::string x_file, y_file;
    bool packed = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("X", x_literal, "first sequence as an ASCII {0,1} string");
        cmd->add_option("Y", y_literal, "second sequence as an ASCII {0,1} string");
        cmd->add_option("--x-file", x_file, "read X from file instead");
        cmd->add_option("--y-file", y_file, "read Y from file instead");
        cmd->add_flag("--packed", packed,
                      "sequence files are packed binary (u64 LE length + bytes)");
    }

    std::pair<lcslab::BinarySequence, lcslab::BinarySequence> load() const {
        return {load_sequence(x_literal, x_file, packed),
                load_sequence(y_literal, y_file, packed)};
    }
};

std::vector<std::size_t> parse_sizes(const std::string& csv) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) sizes.push_back(std::stoull(item));
    if (sizes.empty()) throw std::runtime_error("--sizes: expected a comma-separated list");
    return sizes;
}

std::vector<double> parse_doubles(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    if (out.empty()) throw std::runtime_error("expected a comma-separated list of numbers");
    return out;
}

struct AlphaRange {
    double lo = 0.5, hi = 2.0, step = 0.025;
};

AlphaRange parse_alpha_range(const std::string& text) {
    AlphaRange r;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &r.lo, &r.hi, &r.step) != 3 || r.step <= 0) {
        throw std::runtime_error("--alpha-range: expected lo:hi:step with step > 0");
    }
    return r;
}

int run_gamma(const OutputOptions& out, const std::string& sizes_csv, std::size_t trials,
              std::uint64_t seed, lcslab::Engine engine, unsigned threads) {
    const auto rows = lcslab::gamma_table(parse_sizes(sizes_csv), trials, seed, engine, threads);
    if (out.format == "json") {
        json doc{{"schema", "lcslab.gamma.v1"},
                 {"rng", lcslab::kRngSchemeVersion},
                 {"seed", seed},
                 {"engine", engine_name(engine)},
                 {"rows", json::array()}};
        for (const auto& r : rows) {
            doc["rows"].push_back({{"n", r.n}, {"trials", r.trials}, {"seed", r.seed},
                                   {"mean", r.mean}, {"err", r.err}});
        }
        emit(out, doc.dump(2) + "\n");
        return 0;
    }
    std::string text = schema_line("gamma", seed, std::string(engine_name(engine)));
    text += "n,trials,seed,mean,err\n";
    for (const auto& r : rows) {
        text += std::to_string(r.n) + "," + std::to_string(r.trials) + "," +
                std::to_string(r.seed) + "," + fixed6(r.mean) + "," + fixed6(r.err) + "\n";
    }
    emit(out, text);
    return 0;
}

int run_psi(const OutputOptions& out, const AlphaRange& range, std::size_t n, std::size_t trials,
            std::uint64_t seed, lcslab::Engine engine, unsigned threads) {
    std::vector<lcslab::PsiPoint> points;
    const auto m_lo = static_cast<std::size_t>(range.lo * static_cast<double>(n) + 0.5);
    const auto m_hi = static_cast<std::size_t>(range.hi * static_cast<double>(n) + 0.5);
    const auto m_step = std::max<std::size_t>(
        1, static_cast<std::size_t>(range.step * static_cast<double>(n) + 0.5));
    for (std::size_t m = m_lo; m <= m_hi; m += m_step) {
        const double alpha = static_cast<double>(m) / static_cast<double>(n);
        points.push_back(lcslab::estimate_psi(alpha, n, trials, lcslab::derive_seed(seed, m),
                                              engine, threads));
    }
    if (out.format == "json") {
        json doc{{"schema", "lcslab.psi.v1"},
                 {"rng", lcslab::kRngSchemeVersion},
                 {"seed", seed},
                 {"engine", engine_name(engine)},
                 {"rows", json::array()}};
        for (const auto& p : points) {
            doc["rows"].push_back({{"alpha", p.alpha}, {"m", p.m}, {"n", p.n},
                                   {"trials", p.trials}, {"seed", p.seed},
                                   {"estimate", p.estimate}, {"err", p.err},
                                   {"analytic", std::isnan(p.analytic) ? json() : json(p.analytic)}});
        }
        emit(out, doc.dump(2) + "\n");
        return 0;
    }
    std::string text = schema_line("psi", seed, std::string(engine_name(engine)));
    text += "alpha,m,n,trials,seed,estimate,err,analytic\n";
    for (const auto& p : points) {
        text += fixed6(p.alpha) + "," + std::to_string(p.m) + "," + std::to_string(p.n) + "," +
                std::to_string(p.trials) + "," + std::to_string(p.seed) + "," +
                fixed6(p.estimate) + "," + fixed6(p.err) + "," +
                (std::isnan(p.analytic) ? std::string() : fixed6(p.analytic)) + "\n";
    }
    emit(out, text);
    return 0;
}

int run_concentration(const OutputOptions& out, std::size_t n, std::size_t trials,
                      const std::string& lambdas_csv, std::uint64_t seed, lcslab::Engine engine,
                      unsigned threads) {
    const auto points =
        lcslab::concentration_check(n, trials, parse_doubles(lambdas_csv), seed, engine, threads);
    if (out.format == "json") {
        json doc{{"schema", "lcslab.concentration.v1"},
                 {"rng", lcslab::kRngSchemeVersion},
                 {"seed", seed},
                 {"engine", engine_name(engine)},
                 {"n", n},
                 {"rows", json::array()}};
        for (const auto& p : points) {
            doc["rows"].push_back({{"lambda", p.lambda}, {"empirical", p.empirical},
                                   {"bound", p.bound}, {"mode", p.exact ? "exact" : "sampled"}});
        }
        emit(out, doc.dump(2) + "\n");
        return 0;
    }
    std::string text = schema_line("concentration", seed, std::string(engine_name(engine)));
    text += "lambda,empirical,bound,mode\n";
    for (const auto& p : points) {
        text += fixed6(p.lambda) + "," + fixed6(p.empirical) + "," + fixed6(p.bound) + "," +
                (p.exact ? "exact" : "sampled") + "\n";
    }
    emit(out, text);
    return 0;
}

int run_embed(const OutputOptions& out, unsigned m, unsigned n, std::size_t mc_trials,
              std::uint64_t seed) {
    const auto exact = lcslab::embed_prob(m, n);
    std::optional<lcslab::TrialStats> mc;
    if (mc_trials > 0) mc = lcslab::embed_prob_mc(m, n, mc_trials, seed);
    if (out.format == "json") {
        json doc{{"schema", "lcslab.embed.v1"},
                 {"seed", seed},
                 {"m", m},
                 {"n", n},
                 {"exact", {{"numerator", exact.num.str()}, {"denominator", exact.den.str()},
                            {"value", exact.to_double()}}}};
        if (mc) doc["mc"] = {{"trials", mc->trials}, {"mean", mc->mean}, {"err", mc->err}};
        emit(out, doc.dump(2) + "\n");
        return 0;
    }
    std::string text = schema_line("embed", seed, "");
    text += "kind,numerator,denominator,value,err\n";
    text += "exact," + exact.num.str() + "," + exact.den.str() + "," + fixed6(exact.to_double()) +
            ",\n";
    if (mc) text += "mc,,," + fixed6(mc->mean) + "," + fixed6(mc->err) + "\n";
    emit(out, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lcslab: LCS engines, exact embedding combinatorics and seeded "
                 "Monte Carlo estimation of the Chvatal-Sankoff constant"};
    app.require_subcommand(1);

    OutputOptions out;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 1;
    std::string engine_arg = "rows";
    app.add_option("--format", out.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", out.out_path, "write output to file instead of stdout");
    app.add_option("--seed", seed, "master seed")->capture_default_str();
    app.add_option("--threads", threads, "worker count (never changes emitted digits)")
        ->capture_default_str();

    // lcs
    auto* lcs_cmd = app.add_subcommand("lcs", "length of the longest common subsequence");
    SequencePairArgs lcs_args;
    lcs_args.attach(lcs_cmd);
    lcs_cmd->add_option("--engine", engine_arg, "dp, rows, fsm or poset")->capture_default_str();

    // prefix
    auto* prefix_cmd =
        app.add_subcommand("prefix", "LCS lengths of Y against every initial segment of X");
    SequencePairArgs prefix_args;
    prefix_args.attach(prefix_cmd);

    // difftable
    auto* diff_cmd = app.add_subcommand("difftable", "dump the 0/1 differential table");
    SequencePairArgs diff_args;
    diff_args.attach(diff_cmd);
    std::string diff_engine = "dp";
    diff_cmd->add_option("--engine", diff_engine, "dp (oracle) or fsm (frozen machine)")
        ->check(CLI::IsMember({"dp", "fsm"}))
        ->capture_default_str();

    // fsm-calibrate
    auto* cal_cmd = app.add_subcommand("fsm-calibrate",
                                       "search machine interpretations against the DP oracle");
    std::string report_path;
    cal_cmd->add_option("--report", report_path, "also write the full report to a file");

    // embed
    auto* embed_cmd = app.add_subcommand("embed", "embedding probability p(m,n)");
    unsigned embed_m = 0, embed_n = 0;
    std::size_t mc_trials = 0;
    embed_cmd->add_option("m", embed_m, "pattern length")->required();
    embed_cmd->add_option("n", embed_n, "host length")->required();
    embed_cmd->add_option("--mc", mc_trials, "also run a Monte Carlo check with this many trials");

    // gamma
    auto* gamma_cmd = app.add_subcommand("gamma", "Monte Carlo table of E[L(n,n)]/n");
    std::string sizes_csv;
    std::size_t gamma_trials = 50;
    gamma_cmd->add_option("--sizes", sizes_csv, "comma-separated n values")->required();
    gamma_cmd->add_option("--trials", gamma_trials, "trials per size")->capture_default_str();
    gamma_cmd->add_option("--engine", engine_arg, "dp, rows, fsm or poset");

    // psi
    auto* psi_cmd = app.add_subcommand("psi", "sweep of E[L(alpha*n,n)]/n with analytic column");
    std::string alpha_range_arg = "0.5:2:0.025";
    std::size_t psi_n = 1000, psi_trials = 20;
    psi_cmd->add_option("--alpha-range", alpha_range_arg, "lo:hi:step")->capture_default_str();
    psi_cmd->add_option("--n", psi_n, "inner sequence length")->capture_default_str();
    psi_cmd->add_option("--trials", psi_trials, "trials per point")->capture_default_str();
    psi_cmd->add_option("--engine", engine_arg, "dp, rows, fsm or poset");

    // concentration
    auto* conc_cmd = app.add_subcommand("concentration", "tail frequencies against the "
                                                         "Azuma-Hoeffding value");
    std::size_t conc_n = 1024, conc_trials = 1000;
    std::string lambdas_csv = "0.5,1,2,4";
    conc_cmd->add_option("--n", conc_n, "sequence length")->capture_default_str();
    conc_cmd->add_option("--trials", conc_trials, "sample count")->capture_default_str();
    conc_cmd->add_option("--lambdas", lambdas_csv, "comma-separated lambda values")
        ->capture_default_str();
    conc_cmd->add_option("--engine", engine_arg, "dp, rows, fsm or poset");

    CLI11_PARSE(app, argc, argv);

    try {
        if (lcs_cmd->parsed()) {
            const auto [x, y] = lcs_args.load();
            const auto engine = lcslab::engine_from_name(engine_arg);
            emit(out, std::to_string(lcslab::lcs_with_engine(x, y, engine)) + "\n");
            return 0;
        }
        if (prefix_cmd->parsed()) {
            const auto [x, y] = prefix_args.load();
            const auto lengths = lcslab::prefix_lengths(x, y);
            if (out.format == "json") {
                emit(out, json(lengths).dump() + "\n");
            } else {
                std::string text;
                for (std::size_t k = 0; k < lengths.size(); ++k) {
                    text += (k ? "," : "") + std::to_string(lengths[k]);
                }
                emit(out, text + "\n");
            }
            return 0;
        }
        if (diff_cmd->parsed()) {
            const auto [x, y] = diff_args.load();
            const auto rows = diff_engine == "fsm"
                                  ? lcslab::fsm_diff_table(x, y, lcslab::FsmSpec::reference(),
                                                           lcslab::frozen_fsm_config())
                                  : lcslab::diff_table(x, y);
            std::string text;
            for (const auto& row : rows) {
                for (auto bit : row) text += static_cast<char>('0' + bit);
                text += "\n";
            }
            emit(out, text);
            return 0;
        }
        if (cal_cmd->parsed()) {
            const auto result = lcslab::calibrate_fsm(lcslab::FsmSpec::reference());
            const std::string report = result.report();
            if (!report_path.empty()) {
                std::ofstream f(report_path, std::ios::binary);
                if (!f) throw std::runtime_error("cannot open report file: " + report_path);
                f << report;
            }
            emit(out, report);
            return 0;
        }
        if (embed_cmd->parsed()) return run_embed(out, embed_m, embed_n, mc_trials, seed);
        if (gamma_cmd->parsed()) {
            return run_gamma(out, sizes_csv, gamma_trials, seed,
                             lcslab::engine_from_name(engine_arg), threads);
        }
        if (psi_cmd->parsed()) {
            return run_psi(out, parse_alpha_range(alpha_range_arg), psi_n, psi_trials, seed,
                           lcslab::engine_from_name(engine_arg), threads);
        }
        if (conc_cmd->parsed()) {
            return run_concentration(out, conc_n, conc_trials, lambdas_csv, seed,
                                     lcslab::engine_from_name(engine_arg), threads);
        }
    } catch (const std::exception& e) {
        std::cerr << "lcslab: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
