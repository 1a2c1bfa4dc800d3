#pragma once

#include <cstddef>
#include <unordered_map>

#include "xorsat/bitmatrix.hpp"

namespace xorsat {

// Raised at table build when two distinct errors of weight <= ell share a
// syndrome; this is exactly the signal that 2*ell+1 exceeds the code distance.
class SyndromeCollision : public Error {
public:
    SyndromeCollision(BitVec e1, BitVec e2)
        : Error(ErrCode::syndrome_collision,
                "syndrome collision between errors " + e1.to_string() + " and " + e2.to_string()),
          e1_(std::move(e1)),
          e2_(std::move(e2)) {}
    const BitVec& e1() const noexcept { return e1_; }
    const BitVec& e2() const noexcept { return e2_; }

private:
    BitVec e1_, e2_;
};

class UnknownSyndrome : public Error {
public:
    explicit UnknownSyndrome(const BitVec& s)
        : Error(ErrCode::unknown_syndrome, "no stored error for syndrome " + s.to_string()) {}
};

// Syndrome -> minimal-weight error map covering every error of weight <= ell.
// Immutable after construction; safe to share across threads.
class DecodeTable {
public:
    std::size_t ell() const noexcept { return ell_; }
    std::size_t n_checks() const noexcept { return n_checks_; }
    std::size_t size() const noexcept { return entries_.size(); }

    // Error e with H*e = s, or UnknownSyndrome if s maps to no stored error
    // (weight of the true error exceeded ell).
    const BitVec& decode(const BitVec& s) const;

    friend DecodeTable build_decode_table(const BitMatrix& h, std::size_t ell);

private:
    std::size_t ell_ = 0;
    std::size_t n_checks_ = 0;
    std::unordered_map<BitVec, BitVec, BitVecHash> entries_;
};

// Enumerates all errors of weight <= ell and inserts them keyed by syndrome.
// Collision detection is eager: the build fails on the first pair of distinct
// errors sharing a syndrome. Entry count is capped (see Caps).
DecodeTable build_decode_table(const BitMatrix& h, std::size_t ell);

inline const BitVec& decode(const DecodeTable& t, const BitVec& s) { return t.decode(s); }

} // namespace xorsat
