#include "lcslab/dp.hpp"

#include <algorithm>

namespace lcslab {

LcsTable lcs_table(const BinarySequence& x, const BinarySequence& y) {
    const std::size_t m = x.size(), n = y.size();
    LcsTable table{m, n, std::vector<std::uint32_t>((m + 1) * (n + 1), 0)};
    for (std::size_t i = 1; i <= m; ++i) {
        const int xi = x.symbol(i);
        for (std::size_t j = 1; j <= n; ++j) {
            table.at(i, j) = (xi == y.symbol(j))
                                 ? table.at(i - 1, j - 1) + 1
                                 : std::max(table.at(i, j - 1), table.at(i - 1, j));
        }
    }
    return table;
}

namespace {

// One DP step over the full inner sequence; `row` is overwritten in place,
// carrying the previous row's diagonal through `diag`.
void advance_row(std::vector<std::uint32_t>& row, const BinarySequence& inner, int outer_symbol) {
    std::uint32_t diag = row[0];
    for (std::size_t j = 1; j <= inner.size(); ++j) {
        const std::uint32_t up = row[j];
        row[j] = (outer_symbol == inner.symbol(j)) ? diag + 1 : std::max(row[j - 1], up);
        diag = up;
    }
}

}  // namespace

std::uint32_t lcs_length(const BinarySequence& x, const BinarySequence& y) {
    const BinarySequence& outer = x.size() >= y.size() ? x : y;
    const BinarySequence& inner = x.size() >= y.size() ? y : x;
    std::vector<std::uint32_t> row(inner.size() + 1, 0);
    for (std::size_t i = 1; i <= outer.size(); ++i) advance_row(row, inner, outer.symbol(i));
    return row[inner.size()];
}

std::vector<std::uint32_t> prefix_lengths(const BinarySequence& x, const BinarySequence& y) {
    std::vector<std::uint32_t> out;
    out.reserve(x.size() + 1);
    out.push_back(0);
    std::vector<std::uint32_t> row(y.size() + 1, 0);
    for (std::size_t i = 1; i <= x.size(); ++i) {
        advance_row(row, y, x.symbol(i));
        out.push_back(row[y.size()]);
    }
    return out;
}

}  // namespace lcslab
