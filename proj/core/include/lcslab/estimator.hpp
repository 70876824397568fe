#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "lcslab/sequence.hpp"
#include "lcslab/trial_stats.hpp"

namespace lcslab {

enum class Engine { Dp, Rows, Fsm, Poset };

Engine engine_from_name(std::string_view name);  // throws on unknown name
std::string_view engine_name(Engine engine);

// L(X,Y) through the selected engine. All four agree on every input.
std::uint32_t lcs_with_engine(const BinarySequence& x, const BinarySequence& y, Engine engine);

// One point of the psi sweep: alpha = m/n, Monte Carlo estimate of
// E[L(floor(alpha*n), n)]/n with err, and the analytic elliptical-arc value
// psi_star(alpha) (NaN outside [1/2, 2]).
struct PsiPoint {
    double alpha = 0.0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t trials = 0;
    double estimate = 0.0;
    double err = 0.0;
    double analytic = 0.0;
    std::uint64_t seed = 0;
};

struct ConcentrationPoint {
    double lambda = 0.0;
    double empirical = 0.0;  // tail frequency (exact probability in exact mode)
    double bound = 0.0;      // two-sided Azuma value
    bool exact = false;
};

// Mean of L(X,Y)/n over `trials` independent random pairs of length n.
// Trial k draws X from stream 2k and Y from stream 2k+1, so results are
// independent of execution order and extendable without recomputation.
TrialStats estimate_gamma(std::size_t n, std::size_t trials, std::uint64_t seed,
                          Engine engine = Engine::Rows, unsigned threads = 1);

// Monte Carlo estimate of E[L(floor(alpha*n), n)]/n.
PsiPoint estimate_psi(double alpha, std::size_t n, std::size_t trials, std::uint64_t seed,
                      Engine engine = Engine::Rows, unsigned threads = 1);

// Elliptical-arc approximation sqrt((4mn - n^2 - m^2)/3), defined for
// n/2 <= m <= 2n; psi_star(alpha) = l_star(alpha*n, n)/n = sqrt((4a-a^2-1)/3).
// Throw std::domain_error outside the domain.
double l_star(double m, double n);
double psi_star(double alpha);

// Sweep m = n/2 .. 2n in steps of m_step at fixed n: empirical L/n next to
// the analytic column. Per-point seeds derive from (seed, m).
std::vector<PsiPoint> figure1_sweep(std::size_t n, std::size_t m_step, std::size_t trials,
                                    std::uint64_t seed, Engine engine = Engine::Rows,
                                    unsigned threads = 1);

// Batch of estimate_gamma runs; the per-size seed derives from (seed, n).
std::vector<TrialStats> gamma_table(const std::vector<std::size_t>& sizes, std::size_t trials,
                                    std::uint64_t seed, Engine engine = Engine::Rows,
                                    unsigned threads = 1);

// Tail frequencies Pr{|L - mean| > lambda*sqrt(n)} against the two-sided
// Azuma value. Uses the exhaustive distribution instead of sampling when
// 2n is within the enumeration budget.
std::vector<ConcentrationPoint> concentration_check(std::size_t n, std::size_t trials,
                                                    const std::vector<double>& lambdas,
                                                    std::uint64_t seed,
                                                    Engine engine = Engine::Rows,
                                                    unsigned threads = 1);

}  // namespace lcslab
