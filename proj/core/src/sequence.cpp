#include "lcslab/sequence.hpp"

#include <bit>
#include <stdexcept>

namespace lcslab {

BinarySequence BinarySequence::from_string(std::string_view text) {
    BinarySequence seq(std::vector<std::uint64_t>(word_count(text.size()), 0), text.size());
    for (std::size_t k = 0; k < text.size(); ++k) {
        const char c = text[k];
        if (c != '0' && c != '1') {
            throw std::invalid_argument("BinarySequence: symbol outside {0,1} at position " +
                                        std::to_string(k));
        }
        seq.set_bit(k, c - '0');
    }
    return seq;
}

BinarySequence BinarySequence::from_packed_bytes(std::span<const std::uint8_t> bytes,
                                                 std::size_t length) {
    if (bytes.size() * 8 < length) {
        throw std::invalid_argument("BinarySequence: packed buffer shorter than declared length");
    }
    BinarySequence seq(std::vector<std::uint64_t>(word_count(length), 0), length);
    for (std::size_t k = 0; k < length; ++k) {
        seq.set_bit(k, (bytes[k >> 3] >> (k & 7)) & 1u);
    }
    return seq;
}

BinarySequence BinarySequence::prefix(std::size_t k) const {
    if (k > length_) throw std::out_of_range("BinarySequence::prefix: k exceeds length");
    BinarySequence seq(std::vector<std::uint64_t>(words_.begin(),
                                                  words_.begin() + static_cast<std::ptrdiff_t>(word_count(k))),
                       k);
    if (k & 63) seq.words_.back() &= (std::uint64_t{1} << (k & 63)) - 1;
    return seq;
}

BinarySequence BinarySequence::complement() const {
    BinarySequence seq(words_, length_);
    for (auto& w : seq.words_) w = ~w;
    if (length_ & 63) seq.words_.back() &= (std::uint64_t{1} << (length_ & 63)) - 1;
    return seq;
}

std::size_t BinarySequence::count_ones() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::string BinarySequence::to_string() const {
    std::string out(length_, '0');
    for (std::size_t k = 0; k < length_; ++k) out[k] = static_cast<char>('0' + (*this)[k]);
    return out;
}

std::vector<std::uint8_t> BinarySequence::to_packed_bytes() const {
    std::vector<std::uint8_t> out((length_ + 7) / 8, 0);
    for (std::size_t k = 0; k < length_; ++k) {
        out[k >> 3] |= static_cast<std::uint8_t>((*this)[k] << (k & 7));
    }
    return out;
}

BinarySequence operator+(const BinarySequence& a, const BinarySequence& b) {
    BinarySequence seq(std::vector<std::uint64_t>(BinarySequence::word_count(a.length_ + b.length_), 0),
                       a.length_ + b.length_);
    for (std::size_t k = 0; k < a.length_; ++k) seq.set_bit(k, a[k]);
    for (std::size_t k = 0; k < b.length_; ++k) seq.set_bit(a.length_ + k, b[k]);
    return seq;
}

bool operator==(const BinarySequence& a, const BinarySequence& b) {
    return a.length_ == b.length_ && a.words_ == b.words_;
}

}  // namespace lcslab
