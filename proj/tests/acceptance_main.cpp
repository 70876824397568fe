// Acceptance gate for the lcslab repository. Each criterion prints exactly
// one PASS/FAIL line; the process exit code is the number of failures.
//
// Usage: lcslab_acceptance <path-to-lcslab-cli>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lcslab/lcslab.hpp"

using namespace lcslab;

namespace {

std::string g_cli;
int g_failures = 0;

void verdict(int index, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("[%2d/10] %s: %s%s%s\n", index, ok ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

// Runs the CLI and captures stdout. Returns false if the process could not be
// started or exited nonzero.
bool run_cli(const std::string& args, std::string& output) {
    const std::string cmd = "\"" + g_cli + "\" " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return false;
    output.clear();
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, got);
    return pclose(pipe) == 0;
}

BinarySequence seq_from_code(std::uint64_t code, std::size_t length) {
    std::string text(length, '0');
    for (std::size_t k = 0; k < length; ++k) {
        if ((code >> k) & 1) text[k] = '1';
    }
    return BinarySequence::from_string(text);
}

unsigned worker_count() {
    return std::max(1u, std::thread::hardware_concurrency());
}

// 1. The CLI reports L = 6 for the worked pair under every engine.
void criterion_cli_worked_pair() {
    bool ok = true;
    std::string detail;
    for (const char* engine : {"dp", "rows", "fsm", "poset"}) {
        std::string out;
        const bool ran = run_cli(std::string("lcs 01101110 101001011 --engine ") + engine, out);
        if (!ran || out != "6\n") {
            ok = false;
            detail = std::string("engine ") + engine + " returned '" + out + "'";
            break;
        }
    }
    verdict(1, "CLI reports L(01101110, 101001011) = 6 on all four engines", ok, detail);
}

// 2. All four engines agree on every pair with |X|, |Y| <= 7.
void criterion_engine_agreement() {
    bool ok = true;
    std::string detail;
    for (std::size_t m = 0; m <= 7 && ok; ++m) {
        for (std::size_t n = 0; n <= 7 && ok; ++n) {
            for (std::uint64_t xc = 0; xc < (std::uint64_t{1} << m) && ok; ++xc) {
                for (std::uint64_t yc = 0; yc < (std::uint64_t{1} << n) && ok; ++yc) {
                    const auto x = seq_from_code(xc, m);
                    const auto y = seq_from_code(yc, n);
                    const auto ref = lcs_length(x, y);
                    for (Engine e : {Engine::Rows, Engine::Fsm, Engine::Poset}) {
                        if (lcs_with_engine(x, y, e) != ref) {
                            ok = false;
                            detail = std::string(engine_name(e)) + " disagrees on X=" +
                                     x.to_string() + " Y=" + y.to_string();
                            break;
                        }
                    }
                }
            }
        }
    }
    verdict(2, "engines agree exhaustively for all pairs up to length 7", ok, detail);
}

// 3. Machine calibration finds at least one surviving interpretation, and the
//    full report is archived next to the test binary.
void criterion_calibration() {
    const auto result = calibrate_fsm(FsmSpec::reference());
    const std::string path = "fsm_calibration_report.txt";
    std::ofstream f(path, std::ios::binary);
    f << result.report();
    const bool archived = static_cast<bool>(f);
    const bool frozen_ok =
        !result.survivors.empty() && result.survivors.front() == frozen_fsm_config();
    std::ostringstream detail;
    detail << result.survivors.size() << " survivor(s), " << result.failures.size()
           << " rejected, report in " << path;
    verdict(3, "machine calibration finds surviving configs and archives the report",
            frozen_ok && archived, detail.str());
}

// 4. Monte Carlo gamma at n = 64..1024 reproduces the published reference
//    means within 4 combined standard errors.
void criterion_gamma_reference() {
    struct Ref {
        std::size_t n;
        double mean, err;
    };
    const std::vector<Ref> refs = {{64, 0.77406, 0.00467},
                                   {128, 0.78266, 0.00286},
                                   {256, 0.79656, 0.00166},
                                   {512, 0.80121, 0.00108},
                                   {1024, 0.80594, 0.00061}};
    const auto table = gamma_table({64, 128, 256, 512, 1024}, 50, 1, Engine::Rows, worker_count());
    bool ok = table.size() == refs.size();
    std::ostringstream detail;
    for (std::size_t k = 0; ok && k < refs.size(); ++k) {
        const double gap = std::abs(table[k].mean - refs[k].mean);
        const double tol = 4 * (refs[k].err + table[k].err);
        detail << (k ? " " : "") << "n=" << refs[k].n << ":" << table[k].mean;
        if (gap > tol) {
            ok = false;
            detail << " (off by " << gap << ", tol " << tol << ")";
        }
    }
    verdict(4, "gamma table matches the reference values within 4 combined errors", ok,
            detail.str());
}

// 5. Exact embedding probabilities equal brute-force enumeration for all
//    m <= n <= 12 and satisfy the halving recurrence exactly up to n = 64.
void criterion_embedding() {
    bool ok = true;
    std::string detail;
    for (unsigned n = 0; n <= 12 && ok; ++n) {
        for (unsigned m = 0; m <= n && ok; ++m) {
            const auto pattern = BinarySequence::from_string(std::string(m, '1'));
            std::uint64_t hits = 0;
            for (std::uint64_t yc = 0; yc < (std::uint64_t{1} << n); ++yc) {
                if (lcs_length(pattern, seq_from_code(yc, n)) == m) ++hits;
            }
            if (embed_prob(m, n) != ExactProbability::reduced(hits, BigInt(1) << n)) {
                ok = false;
                detail = "enumeration mismatch at m=" + std::to_string(m) +
                         " n=" + std::to_string(n);
            }
        }
    }
    for (unsigned n = 1; n <= 64 && ok; ++n) {
        for (unsigned m = 1; m <= n && ok; ++m) {
            if (embed_prob(m, n) != (embed_prob(m - 1, n - 1) + embed_prob(m, n - 1)).halved()) {
                ok = false;
                detail = "recurrence fails at m=" + std::to_string(m) + " n=" + std::to_string(n);
            }
        }
    }
    verdict(5, "embedding probabilities match enumeration (n <= 12) and the exact recurrence "
               "(n <= 64)",
            ok, detail);
}

// 6. psi estimates at the flat ends of the curve: 0.4 at alpha = 0.4 and 1.0
//    at alpha = 2.5, each within 0.005 at n = 4096.
void criterion_psi_limits() {
    const auto low = estimate_psi(0.4, 4096, 30, 1, Engine::Rows, worker_count());
    const auto high = estimate_psi(2.5, 4096, 30, 1, Engine::Rows, worker_count());
    const bool ok = std::abs(low.estimate - 0.4) <= 0.005 && std::abs(high.estimate - 1.0) <= 0.005;
    std::ostringstream detail;
    detail << "psi(0.4)=" << low.estimate << " psi(2.5)=" << high.estimate;
    verdict(6, "psi(0.4) ~ 0.4 and psi(2.5) ~ 1.0 within 0.005 at n = 4096", ok, detail.str());
}

// 7. The exact tail mass of L(n,n) sits under the two-sided Azuma value.
//    Tail membership |L - mean| > lambda*sqrt(n) is decided in integer
//    arithmetic: with mean = num/den and lambda^2 = p/q, the condition is
//    q*(L*den - num)^2 > p*n*den^2.
void criterion_exact_concentration() {
    struct Lambda {
        double value;
        BigInt p, q;  // lambda^2 = p/q
    };
    const std::vector<Lambda> lambdas = {{0.5, 1, 4}, {1.0, 1, 1}, {2.0, 4, 1}, {4.0, 16, 1}};
    bool ok = true;
    std::string detail;
    for (unsigned n : {6u, 8u, 10u}) {
        const auto dist = exact_lcs_distribution(n, n, worker_count());
        const auto mean = distribution_mean(dist);
        for (const auto& lambda : lambdas) {
            ExactProbability tail{0, 1};
            for (const auto& [value, prob] : dist) {
                const BigInt offset = BigInt(value) * mean.den - mean.num;
                if (lambda.q * offset * offset > lambda.p * n * mean.den * mean.den) {
                    tail = tail + prob;
                }
            }
            const double bound = azuma_tail(lambda.value, TailSides::Two);
            if (tail.to_double() > bound) {
                ok = false;
                detail = "tail " + tail.to_string() + " exceeds bound at n=" + std::to_string(n) +
                         " lambda=" + std::to_string(lambda.value);
            }
        }
    }
    verdict(7, "exact tail mass respects the Azuma value for n <= 10, lambda in {0.5,1,2,4}", ok,
            detail);
}

// 8. The psi sweep at n = 1000 carries the analytic column; the analytic
//    value at alpha = 1 is sqrt(2/3) to 1e-6. The worst empirical gap on
//    0.6 <= alpha <= 1.8 is reported but not gated.
void criterion_figure_sweep() {
    const auto sweep = figure1_sweep(1000, 25, 20, 1, Engine::Rows, worker_count());
    bool ok = false;
    double worst = 0.0;
    for (const auto& pt : sweep) {
        if (pt.m == 1000 && std::abs(pt.analytic - 0.816496580927726) <= 1e-6) ok = true;
        if (pt.alpha >= 0.6 && pt.alpha <= 1.8 && !std::isnan(pt.analytic)) {
            worst = std::max(worst, std::abs(pt.estimate - pt.analytic));
        }
    }
    std::ostringstream detail;
    detail << sweep.size() << " points, max |estimate - analytic| on [0.6,1.8] = " << worst
           << " (monitored only)";
    verdict(8, "sweep analytic column gives sqrt(2/3) at alpha = 1", ok, detail.str());
}

// 9. Superadditivity under concatenation: L(AC, BD) >= L(A,B) + L(C,D) on
//    1000 random quadruples with lengths up to 128.
void criterion_superadditivity() {
    bool ok = true;
    std::string detail;
    StreamRng lengths({0xacce97, 0});
    for (std::uint64_t t = 0; t < 1000 && ok; ++t) {
        const auto a = random_sequence(lengths.next_u64() % 129, {0xacce97, 4 * t + 1});
        const auto b = random_sequence(lengths.next_u64() % 129, {0xacce97, 4 * t + 2});
        const auto c = random_sequence(lengths.next_u64() % 129, {0xacce97, 4 * t + 3});
        const auto d = random_sequence(lengths.next_u64() % 129, {0xacce97, 4 * t + 4});
        if (lcs_length(a + c, b + d) < lcs_length(a, b) + lcs_length(c, d)) {
            ok = false;
            detail = "violated at trial " + std::to_string(t);
        }
    }
    verdict(9, "superadditivity holds on 1000 random concatenation quadruples", ok, detail);
}

// 10. Worker count never changes emitted digits: the gamma table written with
//     --threads 1 and --threads 8 must be byte-identical.
void criterion_thread_determinism() {
    const std::string f1 = "acceptance_gamma_t1.csv";
    const std::string f8 = "acceptance_gamma_t8.csv";
    std::string out;
    auto run = [&](const std::string& file, const char* threads) {
        return run_cli("--seed 1 --out " + file + " --threads " + threads +
                           " gamma --sizes 64,128,256,512,1024 --trials 50",
                       out);
    };
    bool ok = run(f1, "1") && run(f8, "8");
    if (ok) {
        std::ifstream a(f1, std::ios::binary), b(f8, std::ios::binary);
        std::stringstream sa, sb;
        sa << a.rdbuf();
        sb << b.rdbuf();
        ok = a && b && !sa.str().empty() && sa.str() == sb.str();
    }
    verdict(10, "gamma table is byte-identical under --threads 1 and --threads 8", ok);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: lcslab_acceptance <path-to-lcslab-cli>\n";
        return 2;
    }
    g_cli = argv[1];

    criterion_cli_worked_pair();
    criterion_engine_agreement();
    criterion_calibration();
    criterion_gamma_reference();
    criterion_embedding();
    criterion_psi_limits();
    criterion_exact_concentration();
    criterion_figure_sweep();
    criterion_superadditivity();
    criterion_thread_determinism();

    std::printf("%d/10 criteria passed\n", 10 - g_failures);
    return g_failures;
}
