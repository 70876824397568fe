#include "lcslab/estimator.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

#include "lcslab/combinatorics.hpp"
#include "lcslab/diff_fsm.hpp"
#include "lcslab/dp.hpp"
#include "lcslab/poset.hpp"
#include "lcslab/rng.hpp"
#include "lcslab/row_engine.hpp"

namespace lcslab {

Engine engine_from_name(std::string_view name) {
    if (name == "dp") return Engine::Dp;
    if (name == "rows") return Engine::Rows;
    if (name == "fsm") return Engine::Fsm;
    if (name == "poset") return Engine::Poset;
    throw std::invalid_argument("unknown engine '" + std::string(name) +
                                "' (expected dp, rows, fsm or poset)");
}

std::string_view engine_name(Engine engine) {
    switch (engine) {
        case Engine::Dp: return "dp";
        case Engine::Rows: return "rows";
        case Engine::Fsm: return "fsm";
        case Engine::Poset: return "poset";
    }
    throw std::logic_error("engine_name: bad enum");
}

std::uint32_t lcs_with_engine(const BinarySequence& x, const BinarySequence& y, Engine engine) {
    switch (engine) {
        case Engine::Dp: return lcs_length(x, y);
        case Engine::Rows: return lcs_rows(x, y);
        case Engine::Fsm: return fsm_lcs_length(x, y, FsmSpec::reference(), frozen_fsm_config());
        case Engine::Poset: return lcs_poset(x, y);
    }
    throw std::logic_error("lcs_with_engine: bad enum");
}

namespace {

// Runs fn(k) for k = 0..count-1 across `threads` workers. Results must be
// written to per-index slots so worker count never affects the outcome.
void parallel_trials(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
    if (workers <= 1) {
        for (std::size_t k = 0; k < count; ++k) fn(k);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t k = w; k < count; k += workers) fn(k);
        });
    }
    for (auto& t : pool) t.join();
}

// Mean and sample standard deviation of the mean over per-trial values; the
// reduction order is fixed by trial index, independent of scheduling.
std::pair<double, double> mean_and_err(const std::vector<double>& values) {
    const std::size_t t = values.size();
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = t ? sum / static_cast<double>(t) : 0.0;
    if (t < 2) return {mean, 0.0};
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / (static_cast<double>(t - 1) * static_cast<double>(t)))};
}

std::vector<double> sample_ratios(std::size_t m, std::size_t n, std::size_t trials,
                                  std::uint64_t seed, Engine engine, unsigned threads) {
    std::vector<double> ratios(trials);
    parallel_trials(trials, threads, [&](std::size_t k) {
        const BinarySequence x = random_sequence(m, SeedSpec{seed, 2 * k});
        const BinarySequence y = random_sequence(n, SeedSpec{seed, 2 * k + 1});
        ratios[k] = static_cast<double>(lcs_with_engine(x, y, engine)) / static_cast<double>(n);
    });
    return ratios;
}

}  // namespace

TrialStats estimate_gamma(std::size_t n, std::size_t trials, std::uint64_t seed, Engine engine,
                          unsigned threads) {
    if (n == 0) throw std::invalid_argument("estimate_gamma: n must be positive");
    const auto ratios = sample_ratios(n, n, trials, seed, engine, threads);
    const auto [mean, err] = mean_and_err(ratios);
    return {n, trials, mean, err, seed};
}

PsiPoint estimate_psi(double alpha, std::size_t n, std::size_t trials, std::uint64_t seed,
                      Engine engine, unsigned threads) {
    if (!(alpha > 0.0)) throw std::invalid_argument("estimate_psi: alpha must be positive");
    if (n == 0) throw std::invalid_argument("estimate_psi: n must be positive");
    const auto m = static_cast<std::size_t>(std::floor(alpha * static_cast<double>(n)));
    const auto ratios = sample_ratios(m, n, trials, seed, engine, threads);
    const auto [mean, err] = mean_and_err(ratios);
    const double analytic = (alpha >= 0.5 && alpha <= 2.0)
                                ? psi_star(alpha)
                                : std::numeric_limits<double>::quiet_NaN();
    return {alpha, n, m, trials, mean, err, analytic, seed};
}

double l_star(double m, double n) {
    if (!(m >= n / 2.0 && m <= 2.0 * n)) {
        throw std::domain_error("l_star: requires n/2 <= m <= 2n");
    }
    return std::sqrt((4.0 * m * n - n * n - m * m) / 3.0);
}

double psi_star(double alpha) {
    if (!(alpha >= 0.5 && alpha <= 2.0)) {
        throw std::domain_error("psi_star: requires 1/2 <= alpha <= 2");
    }
    return std::sqrt((4.0 * alpha - alpha * alpha - 1.0) / 3.0);
}

std::vector<PsiPoint> figure1_sweep(std::size_t n, std::size_t m_step, std::size_t trials,
                                    std::uint64_t seed, Engine engine, unsigned threads) {
    if (m_step == 0) throw std::invalid_argument("figure1_sweep: step must be positive");
    std::vector<PsiPoint> points;
    for (std::size_t m = n / 2; m <= 2 * n; m += m_step) {
        const double alpha = static_cast<double>(m) / static_cast<double>(n);
        points.push_back(estimate_psi(alpha, n, trials, derive_seed(seed, m), engine, threads));
    }
    return points;
}

std::vector<TrialStats> gamma_table(const std::vector<std::size_t>& sizes, std::size_t trials,
                                    std::uint64_t seed, Engine engine, unsigned threads) {
    std::vector<TrialStats> rows;
    rows.reserve(sizes.size());
    for (std::size_t n : sizes) {
        rows.push_back(estimate_gamma(n, trials, derive_seed(seed, n), engine, threads));
    }
    return rows;
}

std::vector<ConcentrationPoint> concentration_check(std::size_t n, std::size_t trials,
                                                    const std::vector<double>& lambdas,
                                                    std::uint64_t seed, Engine engine,
                                                    unsigned threads) {
    std::vector<ConcentrationPoint> points;
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    if (2 * n <= 24) {
        const auto dist = exact_lcs_distribution(static_cast<unsigned>(n),
                                                 static_cast<unsigned>(n), threads);
        const double mean = distribution_mean(dist).to_double();
        for (double lambda : lambdas) {
            double tail = 0.0;
            for (const auto& [value, prob] : dist) {
                if (std::abs(static_cast<double>(value) - mean) > lambda * sqrt_n) {
                    tail += prob.to_double();
                }
            }
            points.push_back({lambda, tail, azuma_tail(lambda, TailSides::Two), true});
        }
        return points;
    }
    const auto ratios = sample_ratios(n, n, trials, seed, engine, threads);
    double mean_len = 0.0;
    for (double r : ratios) mean_len += r * static_cast<double>(n);
    mean_len /= static_cast<double>(ratios.size());
    for (double lambda : lambdas) {
        std::size_t outside = 0;
        for (double r : ratios) {
            if (std::abs(r * static_cast<double>(n) - mean_len) > lambda * sqrt_n) ++outside;
        }
        points.push_back({lambda,
                          static_cast<double>(outside) / static_cast<double>(ratios.size()),
                          azuma_tail(lambda, TailSides::Two), false});
    }
    return points;
}

}  // namespace lcslab
