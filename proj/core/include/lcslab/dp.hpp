#pragma once

#include <cstdint>
#include <vector>

#include "lcslab/sequence.hpp"

namespace lcslab {

// Full (m+1) x (n+1) table of prefix-LCS lengths l(i,j) = L(X_i, Y_j).
// Materialized only for small instances and tests; the streaming paths keep
// two rows.
struct LcsTable {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<std::uint32_t> cells;  // row-major, (m+1)*(n+1)

    std::uint32_t at(std::size_t i, std::size_t j) const { return cells[i * (n + 1) + j]; }
    std::uint32_t& at(std::size_t i, std::size_t j) { return cells[i * (n + 1) + j]; }

    std::uint32_t lcs() const { return at(m, n); }
};

// Reference quadratic engine: l(i,j) = l(i-1,j-1)+1 on equal end symbols,
// max(l(i,j-1), l(i-1,j)) otherwise, with zero boundaries.
LcsTable lcs_table(const BinarySequence& x, const BinarySequence& y);

// L(X,Y) with O(min(m,n)) memory.
std::uint32_t lcs_length(const BinarySequence& x, const BinarySequence& y);

// Entry k is L(X_k, Y); entry 0 is 0. Nondecreasing with steps in {0,1}.
std::vector<std::uint32_t> prefix_lengths(const BinarySequence& x, const BinarySequence& y);

}  // namespace lcslab
