#pragma once

#include <cstddef>
#include <cstdint>

namespace lcslab {

// Monte Carlo summary: sample mean, sample standard deviation of the mean
// (err), trial count, and the master seed that reproduces the run.
struct TrialStats {
    std::size_t n = 0;
    std::size_t trials = 0;
    double mean = 0.0;
    double err = 0.0;  // defined for trials >= 2
    std::uint64_t seed = 0;
};

}  // namespace lcslab
