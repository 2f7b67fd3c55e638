#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "fuzzylat/frame.hpp"

namespace fuzzylat::detail {

/// Bit-packed boolean rows over an n-element carrier.
class BitRows {
public:
    using word = std::uint64_t;

    BitRows(Index rows, Index bits)
        : rows_(rows), words_((bits + 63) / 64), data_(static_cast<std::size_t>(rows * words_), 0) {}

    Index words() const noexcept { return words_; }

    void set(Index r, Index b) { data_[at(r) + static_cast<std::size_t>(b / 64)] |= word{1} << (b % 64); }
    bool test(Index r, Index b) const {
        return (data_[at(r) + static_cast<std::size_t>(b / 64)] >> (b % 64)) & 1U;
    }

    const word* row(Index r) const { return data_.data() + at(r); }
    word* row(Index r) { return data_.data() + at(r); }

private:
    std::size_t at(Index r) const { return static_cast<std::size_t>(r * words_); }

    Index rows_;
    Index words_;
    std::vector<word> data_;
};

/// up.row(i) = {j : mu(i,j) > 0}; down.row(j) = {i : mu(i,j) > 0}.
template <typename Scalar>
struct Positivity {
    BitRows up;
    BitRows down;

    explicit Positivity(const BasicFrame<Scalar>& frame)
        : up(frame.size(), frame.size()), down(frame.size(), frame.size()) {
        const Index n = frame.size();
        for (Index i = 0; i < n; ++i) {
            for (Index j = 0; j < n; ++j) {
                if (frame.positive(i, j)) {
                    up.set(i, j);
                    down.set(j, i);
                }
            }
        }
    }
};

/// a subset-of b, over `words` words.
inline bool subset(const BitRows::word* a, const BitRows::word* b, Index words) {
    for (Index w = 0; w < words; ++w) {
        if (a[w] & ~b[w]) return false;
    }
    return true;
}

template <typename F>
void for_each_bit(const BitRows::word* row, Index words, F&& f) {
    for (Index w = 0; w < words; ++w) {
        BitRows::word bits = row[w];
        while (bits) {
            const int tz = std::countr_zero(bits);
            f(w * 64 + tz);
            bits &= bits - 1;
        }
    }
}

}  // namespace fuzzylat::detail
