#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcslab {

// Immutable packed sequence over the alphabet {0,1}.
//
// The domain model is 1-indexed (symbol(1) is the first symbol); storage is
// bit-packed into 64-bit words, little-endian bit order within each word and
// within each serialized byte.
class BinarySequence {
public:
    BinarySequence() = default;

    // Parses an ASCII string over {0,1}. Throws std::invalid_argument on any
    // other character.
    static BinarySequence from_string(std::string_view text);

    // Builds from a packed byte buffer: symbol k (0-based) is bit (k % 8) of
    // byte k / 8. Throws std::invalid_argument if the buffer is too short.
    static BinarySequence from_packed_bytes(std::span<const std::uint8_t> bytes,
                                            std::size_t length);

    std::size_t size() const { return length_; }
    bool empty() const { return length_ == 0; }

    // 0-based access.
    int operator[](std::size_t index) const {
        return static_cast<int>((words_[index >> 6] >> (index & 63)) & 1u);
    }

    // 1-based access matching the domain convention x_i, y_j.
    int symbol(std::size_t i) const { return (*this)[i - 1]; }

    // Initial segment X_k, 0 <= k <= size().
    BinarySequence prefix(std::size_t k) const;

    // Every bit flipped.
    BinarySequence complement() const;

    std::size_t count_ones() const;
    std::size_t count_zeros() const { return length_ - count_ones(); }

    std::string to_string() const;
    std::vector<std::uint8_t> to_packed_bytes() const;

    // Word-level access for engines that exploit the packing.
    std::span<const std::uint64_t> words() const { return words_; }

    friend BinarySequence operator+(const BinarySequence& a, const BinarySequence& b);
    friend bool operator==(const BinarySequence& a, const BinarySequence& b);

private:
    BinarySequence(std::vector<std::uint64_t> words, std::size_t length)
        : words_(std::move(words)), length_(length) {}

    void set_bit(std::size_t index, int value) {
        if (value != 0) words_[index >> 6] |= std::uint64_t{1} << (index & 63);
    }

    static std::size_t word_count(std::size_t length) { return (length + 63) / 64; }

    std::vector<std::uint64_t> words_;
    std::size_t length_ = 0;

    friend BinarySequence random_sequence(std::size_t, struct SeedSpec);
};

}  // namespace lcslab
