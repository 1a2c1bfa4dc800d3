#pragma once

#include <cstdint>
#include <vector>

#include "xorsat/ensembles.hpp"

namespace xorsat {

inline constexpr std::size_t kEnumCap = 28; // hard cap on exhaustive sweeps

// g(z) = m - |Bz ^ v|, the number of satisfied clauses.
int g_value(const XorSatInstance& inst, const BitVec& z);

// f(z) = m - 2|Bz ^ v| = 2 g(z) - m, satisfied minus violated.
int f_value(const XorSatInstance& inst, const BitVec& z);

// Visits every assignment over the low `bits` variables (the remaining
// variables fixed by `prefix`, whose low bits are the high variables) in
// binary-reflected Gray order, so each step XORs one column of B into the
// running residual. fn(packed_z, violated_count) is called once per
// assignment; packed_z has variable j at bit j.
template <typename F>
void gray_sweep(const BitMatrix& b, const BitVec& v, std::size_t bits, std::uint32_t prefix, F&& fn) {
    const std::size_t n = b.cols();
    const std::size_t m = b.rows();
    if (bits > n) fail_invalid("gray_sweep: more sweep bits than variables");
    const std::size_t words = (m + 63) / 64;
    const BitMatrix bt = b.transposed(); // row j = column j of B as an m-bit mask

    std::vector<std::uint64_t> acc(v.words().begin(), v.words().end());
    std::uint32_t z = prefix << bits;
    for (std::size_t j = bits; j < n; ++j)
        if ((z >> j) & 1)
            for (std::size_t w = 0; w < words; ++w) acc[w] ^= bt.row(j).words()[w];

    auto weight = [&] {
        std::size_t c = 0;
        for (std::size_t w = 0; w < words; ++w) c += std::size_t(std::popcount(acc[w]));
        return c;
    };
    fn(z, weight());
    const std::uint64_t total = std::uint64_t(1) << bits;
    for (std::uint64_t i = 1; i < total; ++i) {
        const int j = std::countr_zero(i);
        z ^= std::uint32_t(1) << j;
        const auto& col = bt.row(std::size_t(j)).words();
        for (std::size_t w = 0; w < words; ++w) acc[w] ^= col[w];
        fn(z, weight());
    }
}

template <typename F>
void gray_sweep(const BitMatrix& b, const BitVec& v, F&& fn) {
    gray_sweep(b, v, b.cols(), 0, fn);
}

BitVec unpack_assignment(std::uint32_t z, std::size_t n);

struct BruteForceResult {
    BitVec z_star;
    int g_star = 0;
};

// Max of g over all 2^n assignments; ties broken by lexicographically
// smallest z. threads > 1 partitions the leading variables; the merge is
// deterministic regardless of thread count.
BruteForceResult brute_force_max(const XorSatInstance& inst, int threads = 1);

// N_theta = |{z : |Bz ^ v| <= (1-theta) m}|. The comparison is evaluated
// exactly as stated (integer <= real).
std::uint64_t count_above(const XorSatInstance& inst, double theta, int threads = 1);

// E[N_theta] over uniform v: 2^n P[Bin(m,1/2) <= (1-theta) m], by exact
// binomial summation.
double expected_count_formula(std::size_t n, std::size_t m, double theta);

// Assignments achieving g(z) >= mu*m, as packed words (variable j at bit j).
struct SolutionSet {
    std::size_t n = 0;
    double mu = 0.0;
    std::vector<std::uint32_t> members;
};
SolutionSet enumerate_solutions(const XorSatInstance& inst, double mu);

// Sum over the k consecutive n/k-blocks of min(block weight, block length -
// block weight) of z ^ zp. Requires k | n.
std::size_t dk_semimetric(const BitVec& z, const BitVec& zp, std::size_t k);
std::size_t dk_semimetric_packed(std::uint32_t z, std::uint32_t zp, std::size_t n, std::size_t k);

// d_k(z,z') <= d_k(z,z'') + Hamming(z',z''); test harness for the relaxed
// triangle inequality, expected to always hold.
bool dk_relaxed_triangle_check(const BitVec& z, const BitVec& zp, const BitVec& zpp, std::size_t k);

} // namespace xorsat
