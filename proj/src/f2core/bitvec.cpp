#include "xorsat/bitvec.hpp"

#include <bit>

namespace xorsat {

BitVec BitVec::from_string(const std::string& s) {
    BitVec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            fail(ErrCode::parse, "BitVec::from_string: expected only '0'/'1'");
    }
    return v;
}

std::size_t BitVec::next_set(std::size_t from) const {
    if (from >= len_) return len_;
    std::size_t wi = from >> 6;
    std::uint64_t w = w_[wi] & (~std::uint64_t(0) << (from & 63));
    while (true) {
        if (w) {
            const std::size_t i = (wi << 6) + std::size_t(std::countr_zero(w));
            return i < len_ ? i : len_;
        }
        if (++wi >= w_.size()) return len_;
        w = w_[wi];
    }
}

} // namespace xorsat
