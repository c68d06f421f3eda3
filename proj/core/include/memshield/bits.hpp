#pragma once

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace memshield {

// Fixed-width bit vector, LSB-first indexing (bit 0 is the least significant
// bit of word 0). Widths up to a few thousand bits.
class BitBlock {
public:
    BitBlock() = default;
    explicit BitBlock(size_t width) : width_(width), w_((width + 63) / 64, 0) {
        if (width == 0) throw std::invalid_argument("BitBlock: zero width");
    }
    static BitBlock from_u64(uint64_t v, size_t width = 64) {
        BitBlock b(width);
        b.w_[0] = (width >= 64) ? v : (v & ((uint64_t(1) << width) - 1));
        return b;
    }

    size_t width() const { return width_; }

    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    uint64_t word(size_t k) const { return w_[k]; }
    uint64_t& word(size_t k) { return w_[k]; }
    size_t word_count() const { return w_.size(); }

    uint64_t as_u64() const { return w_[0]; }

    BitBlock& operator^=(const BitBlock& o) {
        if (o.width_ != width_) throw std::invalid_argument("BitBlock: width mismatch");
        for (size_t i = 0; i < w_.size(); i++) w_[i] ^= o.w_[i];
        return *this;
    }
    friend BitBlock operator^(BitBlock a, const BitBlock& b) { a ^= b; return a; }

    bool operator==(const BitBlock& o) const { return width_ == o.width_ && w_ == o.w_; }

    bool all_zero() const {
        for (uint64_t w : w_) if (w) return false;
        return true;
    }
    int popcount() const {
        int n = 0;
        for (uint64_t w : w_) n += __builtin_popcountll(w);
        return n;
    }
    std::vector<size_t> set_positions() const {
        std::vector<size_t> out;
        for (size_t i = 0; i < width_; i++) if (get(i)) out.push_back(i);
        return out;
    }

private:
    size_t width_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace memshield
