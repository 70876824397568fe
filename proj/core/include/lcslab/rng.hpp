#pragma once

#include <cstdint>

#include "lcslab/sequence.hpp"

namespace lcslab {

// RNG scheme version. Published experiment tables are reproducible only
// against the same scheme; bump this if the generator ever changes.
inline constexpr int kRngSchemeVersion = 1;

// SplitMix64 finalizer (Stafford variant 13, as used by splitmix64).
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Deterministic seed derivation for sub-experiments (per-size, per-point).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t salt) {
    return mix64(master ^ mix64(salt ^ 0xA5A5A5A5A5A5A5A5ull));
}

// (master seed, stream index) names one independent-quality random stream.
// The mapping to a byte stream is a pure function of the pair.
struct SeedSpec {
    std::uint64_t master = 0;
    std::uint64_t stream = 0;
};

// Counter-free splittable generator: the stream state is seeded by hashing
// (master, stream) and then advanced as plain SplitMix64.
class StreamRng {
public:
    explicit StreamRng(SeedSpec seed)
        : state_(mix64(seed.master ^ mix64(seed.stream + 0x632BE59BD9B4E019ull))) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// Uniform i.i.d. fair-bit sequence, deterministic in (length, seed).
BinarySequence random_sequence(std::size_t length, SeedSpec seed);

}  // namespace lcslab
