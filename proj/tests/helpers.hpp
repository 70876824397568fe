#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include "lcslab/sequence.hpp"

namespace lcslab::testing {

inline BinarySequence seq_from_code(std::uint64_t code, std::size_t length) {
    std::string s(length, '0');
    for (std::size_t k = 0; k < length; ++k) s[k] = static_cast<char>('0' + ((code >> k) & 1));
    return BinarySequence::from_string(s);
}

inline bool is_subsequence(const std::string& needle, const std::string& hay) {
    std::size_t pos = 0;
    for (char c : needle) {
        while (pos < hay.size() && hay[pos] != c) ++pos;
        if (pos == hay.size()) return false;
        ++pos;
    }
    return true;
}

// Independent LCS oracle: enumerate every subsequence of X and test it
// against Y. Exponential; for tiny inputs only.
inline std::uint32_t brute_force_lcs(const BinarySequence& x, const BinarySequence& y) {
    const std::string xs = x.to_string(), ys = y.to_string();
    std::uint32_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << xs.size()); ++mask) {
        std::string candidate;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            if ((mask >> k) & 1) candidate.push_back(xs[k]);
        }
        if (candidate.size() > best && is_subsequence(candidate, ys)) {
            best = static_cast<std::uint32_t>(candidate.size());
        }
    }
    return best;
}

// Calls fn(X, Y) for every pair with 0 <= |X| <= max_m and 0 <= |Y| <= max_n.
template <typename Fn>
void for_each_pair(std::size_t max_m, std::size_t max_n, Fn&& fn) {
    for (std::size_t m = 0; m <= max_m; ++m) {
        for (std::size_t n = 0; n <= max_n; ++n) {
            for (std::uint64_t xc = 0; xc < (std::uint64_t{1} << m); ++xc) {
                const BinarySequence x = seq_from_code(xc, m);
                for (std::uint64_t yc = 0; yc < (std::uint64_t{1} << n); ++yc) {
                    fn(x, seq_from_code(yc, n));
                }
            }
        }
    }
}

}  // namespace lcslab::testing
