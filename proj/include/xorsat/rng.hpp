#pragma once

#include <cstdint>

#include "xorsat/common.hpp"

namespace xorsat {

// Seedable, splittable xoshiro256** stream. All randomness in the library goes
// through this type so that experiments are bit-reproducible across platforms;
// std::* distributions are avoided on purpose (their output is
// implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed) {
        std::uint64_t x = seed;
        for (auto& w : s_) w = splitmix64(x);
    }

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next() noexcept {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Unbiased uniform draw from [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) fail_invalid("Rng::below: n must be positive");
        const std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    bool bit() noexcept { return next() >> 63; }

    // Uniform double in [0, 1) with 53 random bits.
    double real53() noexcept { return double(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return real53() < p; }

    // Derived stream, independent of draws made on this one. Used wherever
    // trials run under per-trial seeds (possibly in parallel).
    Rng split(std::uint64_t tag) const {
        std::uint64_t x = seed_ ^ 0x9e3779b97f4a7c15ull;
        x = splitmix64(x);
        x ^= tag + 0x9e3779b97f4a7c15ull + (x << 6) + (x >> 2);
        return Rng(splitmix64(x));
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t splitmix64(std::uint64_t& x) noexcept {
        x += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t s_[4];
};

} // namespace xorsat
