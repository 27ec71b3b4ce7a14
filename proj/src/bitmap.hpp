// Copyright (c) Wilf toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef WILF_BITMAP_HPP
#define WILF_BITMAP_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace wilf {

// Fixed-size bitmap over [0, size). Word-packed, little-endian bit order.
class Bitmap {
  public:
    Bitmap() = default;
    explicit Bitmap(std::size_t size)
        : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void clear(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    // Number of set bits in [0, end).
    std::size_t count_below(std::size_t end) const {
        std::size_t full = end >> 6, n = 0;
        for (std::size_t w = 0; w < full; ++w) n += std::popcount(words_[w]);
        if (end & 63) n += std::popcount(words_[full] & ((std::uint64_t{1} << (end & 63)) - 1));
        return n;
    }

    std::size_t count() const { return count_below(size_); }

    // First set bit at or after `from`, or size() if none.
    std::size_t next_set(std::size_t from) const {
        if (from >= size_) return size_;
        std::size_t w = from >> 6;
        std::uint64_t cur = words_[w] & ~((std::uint64_t{1} << (from & 63)) - 1);
        while (true) {
            if (cur != 0) {
                std::size_t bit = (w << 6) + std::countr_zero(cur);
                return bit < size_ ? bit : size_;
            }
            if (++w >= words_.size()) return size_;
            cur = words_[w];
        }
    }

    // dst |= src << shift, truncated to dst's size. src and dst may alias.
    static void or_shifted(Bitmap& dst, const Bitmap& src, std::size_t shift) {
        const std::size_t word_shift = shift >> 6;
        const unsigned bit_shift = shift & 63;
        // Walk high to low so in-place use never reads an updated word.
        for (std::size_t w = dst.words_.size(); w-- > word_shift;) {
            std::size_t s = w - word_shift;
            std::uint64_t v = 0;
            if (s < src.words_.size()) v = src.words_[s] << bit_shift;
            if (bit_shift != 0 && s >= 1 && s - 1 < src.words_.size())
                v |= src.words_[s - 1] >> (64 - bit_shift);
            if (v != 0) dst.words_[w] |= v;
        }
        dst.trim();
    }

    bool operator==(const Bitmap& o) const = default;

  private:
    void trim() {
        if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace wilf

#endif
