#include <doctest.h>

#include "helpers.hpp"
#include "lcslab/dp.hpp"
#include "lcslab/rng.hpp"
#include "lcslab/row_engine.hpp"

using namespace lcslab;
using namespace lcslab::testing;

TEST_SUITE("row_engine") {

TEST_CASE("prefix_max definition and fixed points") {
    CHECK(prefix_max({0, 2, 1, 3, 2}) == RowVector{0, 2, 2, 3, 3});
    CHECK(prefix_max({1, 0, 0}) == RowVector{1, 1, 1});
    CHECK(prefix_max({0, 1, 1, 2}) == RowVector{0, 1, 1, 2});  // nondecreasing input unchanged
}

TEST_CASE("prefix_max is idempotent and nondecreasing") {
    StreamRng rng(SeedSpec{17, 0});
    for (int t = 0; t < 50; ++t) {
        RowVector v(1 + rng.next_u64() % 20);
        for (auto& e : v) e = static_cast<std::uint32_t>(rng.next_u64() % 10);
        const auto once = prefix_max(v);
        CHECK(prefix_max(once) == once);
        for (std::size_t k = 1; k < once.size(); ++k) CHECK(once[k] >= once[k - 1]);
    }
}

TEST_CASE("match_shift on Y=101") {
    const auto y = BinarySequence::from_string("101");
    CHECK(match_shift({0, 0, 0, 0}, y, 1) == RowVector{0, 1, 0, 1});
    CHECK(match_shift({0, 0, 0, 0}, y, 0) == RowVector{0, 0, 1, 0});
}

TEST_CASE("match_shift leaves rows alone when no symbol matches") {
    const auto zeros = BinarySequence::from_string("0000");
    const RowVector v{0, 1, 1, 2, 2};
    CHECK(match_shift(v, zeros, 1) == v);
}

TEST_CASE("match_shift rejects length mismatches") {
    CHECK_THROWS_AS(match_shift({0, 0}, BinarySequence::from_string("101"), 1),
                    std::invalid_argument);
}

TEST_CASE("relabeling: match on 0 equals match on 1 over the complement") {
    StreamRng rng(SeedSpec{23, 0});
    for (int t = 0; t < 50; ++t) {
        const auto y = random_sequence(rng.next_u64() % 24, SeedSpec{23, 100 + t});
        RowVector v(y.size() + 1);
        for (auto& e : v) e = static_cast<std::uint32_t>(rng.next_u64() % 5);
        CHECK(match_shift(v, y, 0) == match_shift(v, y.complement(), 1));
    }
}

TEST_CASE("next_row reproduces DP rows") {
    const auto y = BinarySequence::from_string("101");
    CHECK(next_row({0, 0, 0, 0}, y, 1) == RowVector{0, 1, 1, 1});
    CHECK(next_row({0, 1, 1, 1}, y, 0) == RowVector{0, 1, 2, 2});
    CHECK(next_row({0}, BinarySequence{}, 1) == RowVector{0});
}

TEST_CASE("next_row preserves row validity") {
    for (std::uint64_t t = 0; t < 40; ++t) {
        const auto x = random_sequence(1 + t % 10, SeedSpec{31, 2 * t});
        const auto y = random_sequence(t % 16, SeedSpec{31, 2 * t + 1});
        const auto rows = lcs_all_rows(x, y);
        for (const auto& row : rows) {
            CHECK(row[0] == 0);
            for (std::size_t k = 1; k < row.size(); ++k) {
                CHECK(row[k] >= row[k - 1]);
                CHECK(row[k] - row[k - 1] <= 1);
            }
        }
    }
}

TEST_CASE("engine equivalence with the DP table") {
    CHECK(lcs_rows(BinarySequence::from_string("01101110"),
                   BinarySequence::from_string("101001011")) == 6);
    SUBCASE("identity") {
        const auto x = random_sequence(100, SeedSpec{37, 0});
        CHECK(lcs_rows(x, x) == x.size());
    }
    SUBCASE("exhaustive small sizes") {
        for_each_pair(5, 5, [](const BinarySequence& x, const BinarySequence& y) {
            CHECK(lcs_rows(x, y) == lcs_length(x, y));
        });
    }
    SUBCASE("random pairs up to length 64") {
        for (std::uint64_t t = 0; t < 200; ++t) {
            StreamRng lens(SeedSpec{41, 3 * t});
            const auto x = random_sequence(lens.next_u64() % 65, SeedSpec{41, 3 * t + 1});
            const auto y = random_sequence(lens.next_u64() % 65, SeedSpec{41, 3 * t + 2});
            CHECK(lcs_rows(x, y) == lcs_length(x, y));
        }
    }
    SUBCASE("all rows agree with the materialized table") {
        const auto x = random_sequence(12, SeedSpec{43, 0});
        const auto y = random_sequence(17, SeedSpec{43, 1});
        const auto rows = lcs_all_rows(x, y);
        const auto table = lcs_table(x, y);
        for (std::size_t i = 0; i <= x.size(); ++i) {
            for (std::size_t j = 0; j <= y.size(); ++j) CHECK(rows[i][j] == table.at(i, j));
        }
    }
}

}  // TEST_SUITE
