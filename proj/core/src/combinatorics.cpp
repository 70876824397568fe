#include "lcslab/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "lcslab/dp.hpp"

namespace lcslab {

ExactProbability ExactProbability::reduced(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("ExactProbability: zero denominator");
    if (num < 0 || den < 0) throw std::invalid_argument("ExactProbability: negative value");
    if (num == 0) return {0, 1};
    const BigInt g = boost::multiprecision::gcd(num, den);
    return {num / g, den / g};
}

ExactProbability ExactProbability::operator+(const ExactProbability& other) const {
    return reduced(num * other.den + other.num * den, den * other.den);
}

ExactProbability ExactProbability::operator*(const ExactProbability& other) const {
    return reduced(num * other.num, den * other.den);
}

ExactProbability ExactProbability::halved() const { return reduced(num, den * 2); }

double ExactProbability::to_double() const {
    return num.convert_to<double>() / den.convert_to<double>();
}

std::string ExactProbability::to_string() const {
    return num.str() + "/" + den.str();
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

ExactProbability embed_prob(unsigned m, unsigned n) {
    if (m > n) return {0, 1};
    BigInt tail = 0;
    for (unsigned k = m; k <= n; ++k) tail += binomial(n, k);
    return ExactProbability::reduced(tail, BigInt(1) << n);
}

TrialStats embed_prob_mc(unsigned m, unsigned n, std::size_t trials, std::uint64_t seed,
                         const std::optional<BinarySequence>& x) {
    if (m > n) throw std::invalid_argument("embed_prob_mc: m must not exceed n");
    BinarySequence probe = x.value_or(BinarySequence::from_string(std::string(m, '1')));
    if (probe.size() != m) throw std::invalid_argument("embed_prob_mc: |X| must equal m");
    std::vector<double> hits(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        const BinarySequence y = random_sequence(n, SeedSpec{seed, t});
        hits[t] = lcs_length(probe, y) == m ? 1.0 : 0.0;
    }
    double sum = 0.0;
    for (double h : hits) sum += h;
    const double mean = trials ? sum / static_cast<double>(trials) : 0.0;
    double var = 0.0;
    for (double h : hits) var += (h - mean) * (h - mean);
    const double err =
        trials >= 2 ? std::sqrt(var / (static_cast<double>(trials - 1) * static_cast<double>(trials)))
                    : 0.0;
    return {n, trials, mean, err, seed};
}

double azuma_tail(double lambda, TailSides sides) {
    if (!(lambda > 0.0)) throw std::invalid_argument("azuma_tail: lambda must be positive");
    const double one_sided = std::exp(-lambda * lambda / 8.0);
    return sides == TailSides::Two ? 2.0 * one_sided : one_sided;
}

namespace {

// Plain byte DP over integer-coded sequences; the trusted baseline, kept as
// simple as possible.
unsigned coded_lcs(std::uint32_t xc, unsigned m, std::uint32_t yc, unsigned n,
                   std::vector<std::uint8_t>& row) {
    std::fill(row.begin(), row.begin() + n + 1, 0);
    for (unsigned i = 1; i <= m; ++i) {
        const unsigned xi = (xc >> (i - 1)) & 1u;
        std::uint8_t diag = 0;
        for (unsigned j = 1; j <= n; ++j) {
            const std::uint8_t up = row[j];
            row[j] = (xi == ((yc >> (j - 1)) & 1u)) ? static_cast<std::uint8_t>(diag + 1)
                                                    : std::max(row[j - 1], up);
            diag = up;
        }
    }
    return row[n];
}

}  // namespace

std::map<unsigned, ExactProbability> exact_lcs_distribution(unsigned m, unsigned n,
                                                            unsigned threads) {
    if (m + n > 24) {
        throw std::invalid_argument("exact_lcs_distribution: enumeration budget is m + n <= 24");
    }
    const std::uint64_t x_count = std::uint64_t{1} << m;
    const std::uint64_t y_count = std::uint64_t{1} << n;
    const unsigned worker_count = std::max(1u, threads);

    std::vector<std::vector<std::uint64_t>> partial(
        worker_count, std::vector<std::uint64_t>(std::min(m, n) + 1, 0));
    auto worker = [&](unsigned w) {
        std::vector<std::uint8_t> row(n + 1);
        auto& counts = partial[w];
        for (std::uint64_t xc = w; xc < x_count; xc += worker_count) {
            for (std::uint64_t yc = 0; yc < y_count; ++yc) {
                ++counts[coded_lcs(static_cast<std::uint32_t>(xc), m,
                                   static_cast<std::uint32_t>(yc), n, row)];
            }
        }
    };
    if (worker_count == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < worker_count; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }

    const BigInt total = BigInt(1) << (m + n);
    std::map<unsigned, ExactProbability> dist;
    for (unsigned v = 0; v <= std::min(m, n); ++v) {
        std::uint64_t count = 0;
        for (const auto& counts : partial) count += counts[v];
        if (count != 0) dist[v] = ExactProbability::reduced(count, total);
    }
    return dist;
}

ExactProbability distribution_mean(const std::map<unsigned, ExactProbability>& dist) {
    ExactProbability mean{0, 1};
    for (const auto& [value, prob] : dist) {
        mean = mean + ExactProbability::reduced(prob.num * value, prob.den);
    }
    return mean;
}

}  // namespace lcslab
