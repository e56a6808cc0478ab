#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace wirecode {

// Packed GF(2) vector. Bits beyond `size` are kept zero so popcount and
// equality can work word-wise.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }
    void flip(int i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    void xor_with(const BitVec& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }

    int popcount() const {
        int c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }

    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }

    // parity of <a, b> over GF(2)
    static bool dot(const BitVec& a, const BitVec& b) {
        uint64_t acc = 0;
        for (size_t k = 0; k < a.w_.size(); ++k) acc ^= a.w_[k] & b.w_[k];
        return std::popcount(acc) & 1;
    }

    // index of the lowest set bit, or -1
    int first_set() const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return int(k * 64 + std::countr_zero(w_[k]));
        return -1;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) { return a.n_ == b.n_ && a.w_ == b.w_; }

    const std::vector<uint64_t>& words() const { return w_; }

  private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace wirecode
