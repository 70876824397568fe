#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "lcslab/rng.hpp"
#include "lcslab/sequence.hpp"
#include "lcslab/trial_stats.hpp"

namespace lcslab {

using BigInt = boost::multiprecision::cpp_int;

// Exact nonnegative rational, always kept reduced; probabilities lie in
// [0,1]. Integer arithmetic is the source of truth; to_double() is a view.
struct ExactProbability {
    BigInt num = 0;
    BigInt den = 1;

    static ExactProbability reduced(BigInt num, BigInt den);

    ExactProbability operator+(const ExactProbability& other) const;
    ExactProbability operator*(const ExactProbability& other) const;
    ExactProbability halved() const;
    bool operator==(const ExactProbability&) const = default;

    double to_double() const;
    std::string to_string() const;  // "num/den"
};

BigInt binomial(unsigned n, unsigned k);

// Probability that a fixed length-m binary sequence embeds into a random
// length-n one: 2^{-n} * sum_{k=m..n} C(n,k). Zero when m > n.
ExactProbability embed_prob(unsigned m, unsigned n);

// Monte Carlo check of the embedding probability: empirical frequency of
// L(X,Y) = m over random Y. X defaults to all-ones; any X of length m gives
// the same distribution.
TrialStats embed_prob_mc(unsigned m, unsigned n, std::size_t trials, std::uint64_t seed,
                         const std::optional<BinarySequence>& x = std::nullopt);

enum class TailSides { One, Two };

// Azuma-Hoeffding tail value: e^{-lambda^2/8}, doubled for the two-sided
// bound. Throws std::invalid_argument for lambda <= 0.
double azuma_tail(double lambda, TailSides sides);

// Exact distribution of L(X,Y) over all 2^{m+n} pairs. The trusted baseline
// oracle; requires m + n <= 24. Probabilities sum to exactly 1.
std::map<unsigned, ExactProbability> exact_lcs_distribution(unsigned m, unsigned n,
                                                            unsigned threads = 1);

// Mean of an exact distribution as a rational.
ExactProbability distribution_mean(const std::map<unsigned, ExactProbability>& dist);

}  // namespace lcslab
