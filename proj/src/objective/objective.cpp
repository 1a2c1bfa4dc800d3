#include "xorsat/objective.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <thread>

#include "xorsat/numerics.hpp"

namespace xorsat {

int g_value(const XorSatInstance& inst, const BitVec& z) {
    if (z.len() != inst.n()) fail_invalid("g_value: assignment length mismatch");
    return int(inst.m()) - int(mat_vec_mul(inst.B, z).hamming(inst.v));
}

int f_value(const XorSatInstance& inst, const BitVec& z) {
    return 2 * g_value(inst, z) - int(inst.m());
}

BitVec unpack_assignment(std::uint32_t z, std::size_t n) {
    BitVec v(n);
    for (std::size_t j = 0; j < n; ++j)
        if ((z >> j) & 1) v.set(j, true);
    return v;
}

namespace {

void check_enum_cap(std::size_t n, const char* who) {
    if (n > kEnumCap)
        fail_invalid(std::string(who) + ": n = " + std::to_string(n) + " exceeds the exhaustive cap of " +
                     std::to_string(kEnumCap));
}

// Packed lexicographic order: smaller bit at the first differing index wins.
bool packed_lex_less(std::uint32_t a, std::uint32_t b) {
    if (a == b) return false;
    const int j = std::countr_zero(a ^ b);
    return ((a >> j) & 1) == 0;
}

// Runs fn(prefix, local_accumulator&) over 2^t leading-variable prefixes on
// `threads` workers; accumulators are merged in prefix order.
template <typename Acc, typename Sweep, typename Merge>
Acc partitioned_sweep(std::size_t n, int threads, Sweep&& sweep, Merge&& merge) {
    std::size_t split_bits = 0;
    if (threads > 1 && n > 4) {
        while ((std::size_t(1) << split_bits) < std::size_t(threads) * 4 && split_bits < n - 1 && split_bits < 8)
            ++split_bits;
    }
    const std::size_t parts = std::size_t(1) << split_bits;
    std::vector<Acc> acc(parts);
    if (parts == 1) {
        sweep(0u, n, acc[0]);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        const std::size_t low_bits = n - split_bits;
        auto worker = [&] {
            for (std::size_t p = next.fetch_add(1); p < parts; p = next.fetch_add(1))
                sweep(std::uint32_t(p), low_bits, acc[p]);
        };
        const int nthreads = std::min<int>(threads, int(parts));
        pool.reserve(std::size_t(nthreads));
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    Acc out = std::move(acc[0]);
    for (std::size_t p = 1; p < parts; ++p) merge(out, acc[p]);
    return out;
}

} // namespace

BruteForceResult brute_force_max(const XorSatInstance& inst, int threads) {
    check_enum_cap(inst.n(), "brute_force_max");
    struct Acc {
        std::size_t best_viol = ~std::size_t(0);
        std::uint32_t best_z = 0;
    };
    auto sweep = [&](std::uint32_t prefix, std::size_t bits, Acc& a) {
        gray_sweep(inst.B, inst.v, bits, prefix, [&](std::uint32_t z, std::size_t viol) {
            if (viol < a.best_viol || (viol == a.best_viol && packed_lex_less(z, a.best_z))) {
                a.best_viol = viol;
                a.best_z = z;
            }
        });
    };
    auto merge = [](Acc& a, const Acc& b) {
        if (b.best_viol < a.best_viol || (b.best_viol == a.best_viol && packed_lex_less(b.best_z, a.best_z))) a = b;
    };
    const Acc a = partitioned_sweep<Acc>(inst.n(), threads, sweep, merge);
    return {unpack_assignment(a.best_z, inst.n()), int(inst.m()) - int(a.best_viol)};
}

std::uint64_t count_above(const XorSatInstance& inst, double theta, int threads) {
    check_enum_cap(inst.n(), "count_above");
    if (theta < 0.0 || theta > 1.0) fail_invalid("count_above: theta outside [0,1]");
    const double budget = (1.0 - theta) * double(inst.m());
    struct Acc {
        std::uint64_t count = 0;
    };
    auto sweep = [&](std::uint32_t prefix, std::size_t bits, Acc& a) {
        gray_sweep(inst.B, inst.v, bits, prefix, [&](std::uint32_t, std::size_t viol) {
            if (double(viol) <= budget) ++a.count;
        });
    };
    auto merge = [](Acc& a, const Acc& b) { a.count += b.count; };
    return partitioned_sweep<Acc>(inst.n(), threads, sweep, merge).count;
}

double expected_count_formula(std::size_t n, std::size_t m, double theta) {
    if (theta < 0.0 || theta > 1.0) fail_invalid("expected_count_formula: theta outside [0,1]");
    return std::ldexp(binomial_cdf_half(m, (1.0 - theta) * double(m)), int(n));
}

SolutionSet enumerate_solutions(const XorSatInstance& inst, double mu) {
    if (inst.n() > 26) fail_invalid("enumerate_solutions: n exceeds the 26-variable cap");
    SolutionSet s;
    s.n = inst.n();
    s.mu = mu;
    const double need = mu * double(inst.m());
    gray_sweep(inst.B, inst.v, [&](std::uint32_t z, std::size_t viol) {
        if (double(inst.m()) - double(viol) >= need) s.members.push_back(z);
    });
    return s;
}

std::size_t dk_semimetric(const BitVec& z, const BitVec& zp, std::size_t k) {
    const std::size_t n = z.len();
    if (zp.len() != n) fail_invalid("dk_semimetric: length mismatch");
    if (k == 0 || n % k != 0) fail_invalid("dk_semimetric: k must divide n");
    const std::size_t block = n / k;
    BitVec diff = z ^ zp;
    std::size_t total = 0;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t w = 0;
        for (std::size_t j = i * block; j < (i + 1) * block; ++j) w += diff.get(j);
        total += std::min(w, block - w);
    }
    return total;
}

std::size_t dk_semimetric_packed(std::uint32_t z, std::uint32_t zp, std::size_t n, std::size_t k) {
    const std::size_t block = n / k;
    const std::uint32_t diff = z ^ zp;
    std::size_t total = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const std::uint32_t mask =
            block == 32 ? ~0u : ((std::uint32_t(1) << block) - 1u) << (i * block);
        const std::size_t w = std::size_t(std::popcount(diff & mask));
        total += std::min(w, block - w);
    }
    return total;
}

bool dk_relaxed_triangle_check(const BitVec& z, const BitVec& zp, const BitVec& zpp, std::size_t k) {
    return dk_semimetric(z, zp, k) <= dk_semimetric(z, zpp, k) + zp.hamming(zpp);
}

} // namespace xorsat
