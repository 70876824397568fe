#pragma once

#include <cstdint>
#include <vector>

#include "lcslab/sequence.hpp"

namespace lcslab {

// Row v(0..n) of prefix-LCS lengths; v(0) is the j=0 boundary.
using RowVector = std::vector<std::uint32_t>;

// Maximizer: output(j) = max of v(i) for i <= j. Idempotent, output is
// nondecreasing.
RowVector prefix_max(RowVector v);

// Shift-and-increment operator: output(i) = v(i-1)+1 where y_i equals
// match_symbol, v(i) elsewhere; output(0) = v(0). With match_symbol=1 this is
// the operator triggered by y-symbol 1, with match_symbol=0 its relabeled
// twin. Throws std::invalid_argument on length mismatch.
RowVector match_shift(const RowVector& v, const BinarySequence& y, int match_symbol);

// Advances a valid LCS row by one x-symbol: prefix_max(match_shift(prev)).
RowVector next_row(const RowVector& prev, const BinarySequence& y, int x_symbol);

// Streaming engine: one fused prefix-max scan per x-symbol, O(n) memory.
std::uint32_t lcs_rows(const BinarySequence& x, const BinarySequence& y);

// All m+1 rows, for debugging and CSV dumps.
std::vector<RowVector> lcs_all_rows(const BinarySequence& x, const BinarySequence& y);

}  // namespace lcslab
