#include "lcslab/row_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcslab {

RowVector prefix_max(RowVector v) {
    std::uint32_t running = 0;
    for (auto& e : v) {
        running = std::max(running, e);
        e = running;
    }
    return v;
}

RowVector match_shift(const RowVector& v, const BinarySequence& y, int match_symbol) {
    if (v.size() != y.size() + 1) {
        throw std::invalid_argument("match_shift: row length must be |Y|+1");
    }
    RowVector out(v.size());
    out[0] = v[0];
    for (std::size_t i = 1; i <= y.size(); ++i) {
        out[i] = (y.symbol(i) == match_symbol) ? v[i - 1] + 1 : v[i];
    }
    return out;
}

RowVector next_row(const RowVector& prev, const BinarySequence& y, int x_symbol) {
    return prefix_max(match_shift(prev, y, x_symbol));
}

namespace {

// Fused match_shift + prefix_max, writing into cur.
void advance(const RowVector& prev, RowVector& cur, const BinarySequence& y, int x_symbol) {
    std::uint32_t running = prev[0];
    cur[0] = running;
    for (std::size_t i = 1; i <= y.size(); ++i) {
        const std::uint32_t shifted = (y.symbol(i) == x_symbol) ? prev[i - 1] + 1 : prev[i];
        running = std::max(running, shifted);
        cur[i] = running;
    }
}

}  // namespace

std::uint32_t lcs_rows(const BinarySequence& x, const BinarySequence& y) {
    RowVector prev(y.size() + 1, 0), cur(y.size() + 1, 0);
    for (std::size_t i = 1; i <= x.size(); ++i) {
        advance(prev, cur, y, x.symbol(i));
        std::swap(prev, cur);
    }
    return prev[y.size()];
}

std::vector<RowVector> lcs_all_rows(const BinarySequence& x, const BinarySequence& y) {
    std::vector<RowVector> rows;
    rows.reserve(x.size() + 1);
    rows.emplace_back(y.size() + 1, 0);
    for (std::size_t i = 1; i <= x.size(); ++i) {
        RowVector cur(y.size() + 1, 0);
        advance(rows.back(), cur, y, x.symbol(i));
        rows.push_back(std::move(cur));
    }
    return rows;
}

}  // namespace lcslab
