#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "xorsat/common.hpp"

namespace xorsat {

// Fixed-length vector over F2, packed into 64-bit words. Bit i lives at
// words()[i / 64] >> (i % 64). Length is set at construction and never
// changes; all arithmetic is carry-free XOR/AND plus popcount.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t len) : len_(len), w_(word_count(len), 0) {}

    static BitVec zeros(std::size_t len) { return BitVec(len); }

    static BitVec ones(std::size_t len) {
        BitVec v(len);
        for (auto& w : v.w_) w = ~std::uint64_t(0);
        v.clear_padding();
        return v;
    }

    // "0110..." with index 0 first.
    static BitVec from_string(const std::string& s);

    std::size_t len() const noexcept { return len_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void set(std::size_t i, bool b) {
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (b)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    std::size_t weight() const noexcept {
        std::size_t c = 0;
        for (auto w : w_) c += std::size_t(std::popcount(w));
        return c;
    }

    bool any() const noexcept {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) {
        a ^= b;
        return a;
    }

    // Parity of the AND with `o`; the F2 inner product.
    bool dot(const BitVec& o) const noexcept {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
        return std::popcount(acc) & 1;
    }

    std::size_t hamming(const BitVec& o) const noexcept {
        std::size_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::size_t(std::popcount(w_[i] ^ o.w_[i]));
        return c;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) { return a.len_ == b.len_ && a.w_ == b.w_; }
    friend bool operator!=(const BitVec& a, const BitVec& b) { return !(a == b); }

    // True when, at the first differing index, *this has the 0 bit.
    bool lex_less(const BitVec& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            const std::uint64_t d = w_[i] ^ o.w_[i];
            if (d) {
                const int bit = std::countr_zero(d);
                return ((w_[i] >> bit) & 1) == 0;
            }
        }
        return false;
    }

    // Index of lowest set bit among indices >= from, or len() if none.
    std::size_t next_set(std::size_t from) const;

    const std::vector<std::uint64_t>& words() const noexcept { return w_; }
    std::vector<std::uint64_t>& words() noexcept { return w_; }

    std::string to_string() const {
        std::string s(len_, '0');
        for (std::size_t i = 0; i < len_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    std::size_t hash() const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ len_;
        for (auto w : w_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return std::size_t(h);
    }

private:
    static std::size_t word_count(std::size_t len) { return (len + 63) / 64; }

    void clear_padding() {
        if (len_ & 63) w_.back() &= (~std::uint64_t(0)) >> (64 - (len_ & 63));
    }

    std::size_t len_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec& v) const noexcept { return v.hash(); }
};

} // namespace xorsat
