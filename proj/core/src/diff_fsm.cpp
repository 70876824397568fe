#include "lcslab/diff_fsm.hpp"

#include <future>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lcslab/embedded_data.hpp"
#include "lcslab/rng.hpp"

namespace lcslab {

namespace {

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    bool in_comment = false;
    for (char c : text) {
        if (c == '#') in_comment = true;
        if (c == '\n') in_comment = false;
        if (in_comment || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            if (!current.empty()) tokens.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

BinarySequence sequence_from_code(std::uint64_t code, std::size_t length) {
    std::string s(length, '0');
    for (std::size_t k = 0; k < length; ++k) s[k] = static_cast<char>('0' + ((code >> k) & 1));
    return BinarySequence::from_string(s);
}

}  // namespace

const FsmSpec& FsmSpec::reference() {
    static const FsmSpec spec = FsmSpec::parse(data::kFsmSpecText);
    return spec;
}

std::string FsmSpec::serialize() const {
    std::ostringstream out;
    out << "states 4\ntransition\n";
    for (const auto& row : transition) {
        out << int(row[0]) << ' ' << int(row[1]) << ' ' << int(row[2]) << ' ' << int(row[3]) << '\n';
    }
    out << "output\n";
    for (const auto& row : output) {
        out << int(row[0]) << ' ' << int(row[1]) << ' ' << int(row[2]) << ' ' << int(row[3]) << '\n';
    }
    return out.str();
}

FsmSpec FsmSpec::parse(std::string_view text) {
    const auto tokens = tokenize(text);
    std::size_t pos = 0;
    auto expect = [&](std::string_view word) {
        if (pos >= tokens.size() || tokens[pos] != word) {
            throw std::invalid_argument("FsmSpec::parse: expected '" + std::string(word) + "'");
        }
        ++pos;
    };
    auto number = [&]() -> int {
        if (pos >= tokens.size()) throw std::invalid_argument("FsmSpec::parse: truncated input");
        return std::stoi(tokens[pos++]);
    };
    expect("states");
    if (number() != 4) throw std::invalid_argument("FsmSpec::parse: only 4-state machines supported");
    FsmSpec spec{};
    expect("transition");
    for (auto& row : spec.transition)
        for (auto& cell : row) {
            const int v = number();
            if (v < 0 || v > 3) throw std::invalid_argument("FsmSpec::parse: state out of range");
            cell = static_cast<std::uint8_t>(v);
        }
    expect("output");
    for (auto& row : spec.output)
        for (auto& cell : row) {
            const int v = number();
            if (v < 0 || v > 1) throw std::invalid_argument("FsmSpec::parse: output out of range");
            cell = static_cast<std::uint8_t>(v);
        }
    return spec;
}

std::string FsmConfig::serialize() const {
    std::ostringstream out;
    out << "orientation=" << (orientation == ScanOrientation::Row ? "row" : "column") << '\n'
        << "initial_state=" << initial_state << '\n'
        << "input_bit_order=" << (diff_bit_high ? "diff_high" : "symbol_high") << '\n'
        << "zero_symbol_handling="
        << (relabel == RelabelMode::ComplementSymbol ? "complement" : "swap_columns") << '\n';
    return out.str();
}

FsmConfig FsmConfig::parse(std::string_view text) {
    FsmConfig config{};
    for (const auto& token : tokenize(text)) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("FsmConfig::parse: expected key=value, got '" + token + "'");
        }
        const std::string key = token.substr(0, eq), value = token.substr(eq + 1);
        if (key == "orientation") {
            if (value == "row") config.orientation = ScanOrientation::Row;
            else if (value == "column") config.orientation = ScanOrientation::Column;
            else throw std::invalid_argument("FsmConfig::parse: bad orientation");
        } else if (key == "initial_state") {
            config.initial_state = std::stoi(value);
            if (config.initial_state < 0 || config.initial_state > 3) {
                throw std::invalid_argument("FsmConfig::parse: initial_state out of range");
            }
        } else if (key == "input_bit_order") {
            if (value == "diff_high") config.diff_bit_high = true;
            else if (value == "symbol_high") config.diff_bit_high = false;
            else throw std::invalid_argument("FsmConfig::parse: bad input_bit_order");
        } else if (key == "zero_symbol_handling") {
            if (value == "complement") config.relabel = RelabelMode::ComplementSymbol;
            else if (value == "swap_columns") config.relabel = RelabelMode::SwapColumns;
            else throw std::invalid_argument("FsmConfig::parse: bad zero_symbol_handling");
        } else {
            throw std::invalid_argument("FsmConfig::parse: unknown key '" + key + "'");
        }
    }
    return config;
}

std::vector<DiffRow> diff_table(const BinarySequence& x, const BinarySequence& y) {
    const LcsTable table = lcs_table(x, y);
    std::vector<DiffRow> rows(x.size(), DiffRow(y.size(), 0));
    for (std::size_t i = 1; i <= x.size(); ++i) {
        for (std::size_t j = 1; j <= y.size(); ++j) {
            rows[i - 1][j - 1] = static_cast<std::uint8_t>(table.at(i, j) - table.at(i - 1, j));
        }
    }
    return rows;
}

LcsTable reconstruct_lcs(const std::vector<DiffRow>& rows, std::size_t n) {
    const std::size_t m = rows.size();
    LcsTable table{m, n, std::vector<std::uint32_t>((m + 1) * (n + 1), 0)};
    for (std::size_t i = 1; i <= m; ++i) {
        if (rows[i - 1].size() != n) {
            throw std::invalid_argument("reconstruct_lcs: ragged diff rows");
        }
        for (std::size_t j = 1; j <= n; ++j) {
            table.at(i, j) = table.at(i - 1, j) + rows[i - 1][j - 1];
        }
    }
    return table;
}

FsmStep fsm_step(const FsmSpec& spec, int state, int input_pair) {
    if (state < 0 || state > 3) throw std::out_of_range("fsm_step: state out of range");
    if (input_pair < 0 || input_pair > 3) throw std::out_of_range("fsm_step: input pair out of range");
    return {spec.transition[state][input_pair], spec.output[state][input_pair]};
}

DiffRow fsm_pass(const FsmSpec& spec, const FsmConfig& config, const DiffRow& prev_lane,
                 const BinarySequence& cross, int lane_symbol) {
    if (prev_lane.size() != cross.size()) {
        throw std::invalid_argument("fsm_pass: lane length must match cross sequence length");
    }
    DiffRow out(cross.size());
    int state = config.initial_state;
    const bool relabel_lane = (lane_symbol == 0);
    for (std::size_t k = 1; k <= cross.size(); ++k) {
        int sym = cross.symbol(k);
        if (relabel_lane && config.relabel == RelabelMode::ComplementSymbol) sym ^= 1;
        int pair = config.diff_bit_high ? 2 * prev_lane[k - 1] + sym : 2 * sym + prev_lane[k - 1];
        if (relabel_lane && config.relabel == RelabelMode::SwapColumns) {
            pair ^= config.diff_bit_high ? 1 : 2;
        }
        const auto [next_state, output] = fsm_step(spec, state, pair);
        out[k - 1] = static_cast<std::uint8_t>(output);
        state = next_state;
    }
    return out;
}

std::vector<DiffRow> fsm_diff_table(const BinarySequence& x, const BinarySequence& y,
                                    const FsmSpec& spec, const FsmConfig& config) {
    const std::size_t m = x.size(), n = y.size();
    std::vector<DiffRow> rows(m, DiffRow(n, 0));
    if (config.orientation == ScanOrientation::Row) {
        DiffRow prev(n, 0);
        for (std::size_t i = 1; i <= m; ++i) {
            rows[i - 1] = fsm_pass(spec, config, prev, y, x.symbol(i));
            prev = rows[i - 1];
        }
    } else {
        DiffRow prev(m, 0);
        for (std::size_t j = 1; j <= n; ++j) {
            const DiffRow col = fsm_pass(spec, config, prev, x, y.symbol(j));
            for (std::size_t i = 1; i <= m; ++i) rows[i - 1][j - 1] = col[i - 1];
            prev = col;
        }
    }
    return rows;
}

std::uint32_t fsm_lcs_length(const BinarySequence& x, const BinarySequence& y,
                             const FsmSpec& spec, const FsmConfig& config) {
    if (config.orientation == ScanOrientation::Column) {
        DiffRow lane(x.size(), 0);
        for (std::size_t j = 1; j <= y.size(); ++j) {
            lane = fsm_pass(spec, config, lane, x, y.symbol(j));
        }
        return std::accumulate(lane.begin(), lane.end(), std::uint32_t{0});
    }
    DiffRow lane(y.size(), 0);
    std::uint32_t total = 0;
    for (std::size_t i = 1; i <= x.size(); ++i) {
        lane = fsm_pass(spec, config, lane, y, x.symbol(i));
        if (!lane.empty()) total += lane.back();
    }
    return total;
}

namespace {

// Checks one candidate against the DP differential on the given pair; fills
// the mismatch location on failure.
bool check_pair(const FsmSpec& spec, const FsmConfig& config, const BinarySequence& x,
                const BinarySequence& y, CalibrationMismatch& mismatch) {
    const auto expected = diff_table(x, y);
    const auto actual = fsm_diff_table(x, y, spec, config);
    for (std::size_t i = 0; i < expected.size(); ++i) {
        for (std::size_t j = 0; j < expected[i].size(); ++j) {
            if (expected[i][j] != actual[i][j]) {
                mismatch = {config, x.to_string(), y.to_string(), i + 1, j + 1,
                            expected[i][j], actual[i][j]};
                return false;
            }
        }
    }
    return true;
}

struct CandidateOutcome {
    FsmConfig config;
    bool survived = false;
    CalibrationMismatch mismatch;
};

CandidateOutcome evaluate_candidate(const FsmSpec& spec, const FsmConfig& config,
                                    const CalibrationOptions& options) {
    CandidateOutcome outcome{config, true, {}};
    const std::size_t cap = options.exhaustive_max_len;
    for (std::size_t m = 0; m <= cap && outcome.survived; ++m) {
        for (std::size_t n = 0; n <= cap && outcome.survived; ++n) {
            for (std::uint64_t xc = 0; xc < (std::uint64_t{1} << m) && outcome.survived; ++xc) {
                const BinarySequence x = sequence_from_code(xc, m);
                for (std::uint64_t yc = 0; yc < (std::uint64_t{1} << n); ++yc) {
                    if (!check_pair(spec, config, x, sequence_from_code(yc, n), outcome.mismatch)) {
                        outcome.survived = false;
                        break;
                    }
                }
            }
        }
    }
    for (std::size_t t = 0; t < options.random_pairs && outcome.survived; ++t) {
        StreamRng lengths(SeedSpec{options.seed, 3 * t});
        const std::size_t m = lengths.next_u64() % (options.random_max_len + 1);
        const std::size_t n = lengths.next_u64() % (options.random_max_len + 1);
        const BinarySequence x = random_sequence(m, SeedSpec{options.seed, 3 * t + 1});
        const BinarySequence y = random_sequence(n, SeedSpec{options.seed, 3 * t + 2});
        outcome.survived = check_pair(spec, config, x, y, outcome.mismatch);
    }
    return outcome;
}

}  // namespace

CalibrationResult calibrate_fsm(const FsmSpec& spec, const CalibrationOptions& options) {
    std::vector<FsmConfig> candidates;
    for (auto orientation : {ScanOrientation::Row, ScanOrientation::Column}) {
        for (int init = 0; init < 4; ++init) {
            for (bool diff_high : {true, false}) {
                for (auto relabel : {RelabelMode::ComplementSymbol, RelabelMode::SwapColumns}) {
                    candidates.push_back({orientation, init, diff_high, relabel});
                }
            }
        }
    }

    std::vector<std::future<CandidateOutcome>> futures;
    futures.reserve(candidates.size());
    for (const auto& candidate : candidates) {
        futures.push_back(std::async(std::launch::async, evaluate_candidate, std::cref(spec),
                                     candidate, std::cref(options)));
    }

    CalibrationResult result;
    for (auto& future : futures) {
        CandidateOutcome outcome = future.get();
        if (outcome.survived) {
            result.survivors.push_back(outcome.config);
        } else {
            result.failures.push_back(outcome.mismatch);
        }
    }
    return result;
}

std::string CalibrationResult::report() const {
    std::ostringstream out;
    out << "diff-table machine calibration: " << survivors.size() << " surviving config(s), "
        << failures.size() << " rejected\n\n";
    for (const auto& config : survivors) {
        out << "SURVIVOR\n" << config.serialize() << '\n';
    }
    for (const auto& failure : failures) {
        out << "REJECTED\n"
            << failure.config.serialize() << "first mismatch: X=" << failure.x
            << " Y=" << failure.y << " at (i=" << failure.i << ", j=" << failure.j
            << ") expected " << failure.expected << " got " << failure.actual << "\n\n";
    }
    return out.str();
}

const FsmConfig& frozen_fsm_config() {
    static const FsmConfig config = FsmConfig::parse(data::kFrozenFsmConfigText);
    return config;
}

}  // namespace lcslab
