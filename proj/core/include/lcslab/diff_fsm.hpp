#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lcslab/dp.hpp"
#include "lcslab/sequence.hpp"

namespace lcslab {

// One row of the differential table: T(i,j) = l(i,j) - l(i-1,j), j = 1..n.
// Every entry is 0 or 1; column-prefix sums over i reconstruct l(i,j).
using DiffRow = std::vector<std::uint8_t>;

// Four-state transducer tables: transition[state][input_pair] and
// output[state][input_pair], input pairs indexed 00,01,10,11.
struct FsmSpec {
    std::array<std::array<std::uint8_t, 4>, 4> transition;
    std::array<std::array<std::uint8_t, 4>, 4> output;

    // The published 4-state machine, parsed from the checked-in data file.
    static const FsmSpec& reference();

    std::string serialize() const;
    static FsmSpec parse(std::string_view text);

    bool operator==(const FsmSpec&) const = default;
};

// Which way the machine sweeps the differential table. A row pass consumes
// (T(i-1,j), Y_j) for j = 1..n and emits row i; a column pass consumes
// (T(i,j-1), X_i) for i = 1..m and emits column j.
enum class ScanOrientation : std::uint8_t { Row, Column };

// How the sequence symbol in the input pair is adjusted on lanes whose own
// symbol is 0 (x_i = 0 rows, or y_j = 0 columns). ComplementSymbol flips the
// symbol before the pair is formed; SwapColumns swaps the symbol-bit column
// pairs of the lookup tables.
enum class RelabelMode : std::uint8_t { ComplementSymbol, SwapColumns };

struct FsmConfig {
    ScanOrientation orientation = ScanOrientation::Row;
    int initial_state = 0;
    bool diff_bit_high = true;  // pair = 2*diff + symbol; else 2*symbol + diff
    RelabelMode relabel = RelabelMode::ComplementSymbol;

    std::string serialize() const;
    static FsmConfig parse(std::string_view text);

    bool operator==(const FsmConfig&) const = default;
};

// Differential of consecutive LCS rows, computed from the DP oracle.
std::vector<DiffRow> diff_table(const BinarySequence& x, const BinarySequence& y);

// l(i,j) = sum of T(k,j) for k <= i; inverse of diff_table.
LcsTable reconstruct_lcs(const std::vector<DiffRow>& rows, std::size_t n);

struct FsmStep {
    int next_state;
    int output;
};

// Pure table lookup. Throws std::out_of_range on bad labels.
FsmStep fsm_step(const FsmSpec& spec, int state, int input_pair);

// One machine pass along a lane. prev_lane holds the previous lane of the
// differential table, cross the sequence read crosswise (Y for a row pass,
// X for a column pass), lane_symbol the lane's own symbol (x_i resp. y_j).
DiffRow fsm_pass(const FsmSpec& spec, const FsmConfig& config, const DiffRow& prev_lane,
                 const BinarySequence& cross, int lane_symbol);

// Full differential table generated by the machine (always returned in row
// layout, whatever the scan orientation).
std::vector<DiffRow> fsm_diff_table(const BinarySequence& x, const BinarySequence& y,
                                    const FsmSpec& spec, const FsmConfig& config);

// End-to-end L(X,Y) through the machine, O(lane) memory.
std::uint32_t fsm_lcs_length(const BinarySequence& x, const BinarySequence& y,
                             const FsmSpec& spec, const FsmConfig& config);

struct CalibrationMismatch {
    FsmConfig config;
    std::string x, y;
    std::size_t i = 0, j = 0;  // 1-based position of the first wrong entry
    int expected = 0, actual = 0;
};

struct CalibrationOptions {
    std::size_t exhaustive_max_len = 6;
    std::size_t random_pairs = 1000;
    std::size_t random_max_len = 64;
    std::uint64_t seed = 0x1c51ab;
};

struct CalibrationResult {
    std::vector<FsmConfig> survivors;
    std::vector<CalibrationMismatch> failures;  // first mismatch per failed config

    std::string report() const;
};

// Exhaustive search over the configuration space (2 orientations x 4 initial
// states x 2 bit orders x 2 relabel modes), validated against diff_table.
CalibrationResult calibrate_fsm(const FsmSpec& spec, const CalibrationOptions& options = {});

// The configuration frozen in core/data/fsm_config.txt (first survivor of
// calibrate_fsm in enumeration order).
const FsmConfig& frozen_fsm_config();

}  // namespace lcslab
