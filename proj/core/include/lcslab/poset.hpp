#pragma once

#include <cstdint>
#include <vector>

#include "lcslab/sequence.hpp"

namespace lcslab {

// Match point: x_i = y_j with 1-based indices. Ordered by (i, j).
struct MatchPoint {
    std::uint32_t i;
    std::uint32_t j;
    bool operator==(const MatchPoint&) const = default;
};

// The match poset P = {(i,j) | x_i = y_j} under the strict product order
// (i,j) < (i',j') iff i < i' and j < j'. Point count is
// (#1s in X)(#1s in Y) + (#0s in X)(#0s in Y).
using MatchPoset = std::vector<MatchPoint>;

MatchPoset match_points(const BinarySequence& x, const BinarySequence& y);

// Length of the longest chain in (P,<): equals L(X,Y). O(|P| log |P|) via
// patience sorting on j, scanning points in i-order with equal-i ties fed in
// decreasing j so two matches in one row can never chain.
std::uint32_t longest_chain(const MatchPoset& poset);

std::uint32_t lcs_poset(const BinarySequence& x, const BinarySequence& y);

}  // namespace lcslab
