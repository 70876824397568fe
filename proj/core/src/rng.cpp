#include "lcslab/rng.hpp"

namespace lcslab {

BinarySequence random_sequence(std::size_t length, SeedSpec seed) {
    StreamRng rng(seed);
    std::vector<std::uint64_t> words((length + 63) / 64, 0);
    for (auto& w : words) w = rng.next_u64();
    if (length & 63) words.back() &= (std::uint64_t{1} << (length & 63)) - 1;
    return BinarySequence(std::move(words), length);
}

}  // namespace lcslab
