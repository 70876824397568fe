#include "lcslab/poset.hpp"

#include <algorithm>

namespace lcslab {

MatchPoset match_points(const BinarySequence& x, const BinarySequence& y) {
    MatchPoset poset;
    for (std::uint32_t i = 1; i <= x.size(); ++i) {
        const int xi = x.symbol(i);
        for (std::uint32_t j = 1; j <= y.size(); ++j) {
            if (xi == y.symbol(j)) poset.push_back({i, j});
        }
    }
    return poset;  // already sorted by (i, j): i outer loop, j inner
}

std::uint32_t longest_chain(const MatchPoset& poset) {
    // tails[k] = smallest final j of a chain of length k+1 seen so far
    std::vector<std::uint32_t> tails;
    std::size_t begin = 0;
    while (begin < poset.size()) {
        std::size_t end = begin;
        while (end < poset.size() && poset[end].i == poset[begin].i) ++end;
        // equal-i block in decreasing j: strict order forbids chaining inside it
        for (std::size_t k = end; k > begin; --k) {
            const std::uint32_t j = poset[k - 1].j;
            auto it = std::lower_bound(tails.begin(), tails.end(), j);
            if (it == tails.end()) tails.push_back(j);
            else *it = j;
        }
        begin = end;
    }
    return static_cast<std::uint32_t>(tails.size());
}

std::uint32_t lcs_poset(const BinarySequence& x, const BinarySequence& y) {
    return longest_chain(match_points(x, y));
}

}  // namespace lcslab
