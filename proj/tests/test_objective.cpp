#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "xorsat/objective.hpp"

using namespace xorsat;

namespace {

// Reference enumerator: plain loop over all assignments, no Gray tricks.
int naive_max_g(const XorSatInstance& inst) {
    int best = -1;
    for (std::uint32_t x = 0; x < (1u << inst.n()); ++x)
        best = std::max(best, g_value(inst, unpack_assignment(x, inst.n())));
    return best;
}

std::uint64_t naive_count(const XorSatInstance& inst, double theta) {
    std::uint64_t c = 0;
    for (std::uint32_t x = 0; x < (1u << inst.n()); ++x) {
        const int viol = int(inst.m()) - g_value(inst, unpack_assignment(x, inst.n()));
        if (double(viol) <= (1.0 - theta) * double(inst.m())) ++c;
    }
    return c;
}

XorSatInstance random_instance(std::size_t m, std::size_t n, Rng& rng) {
    XorSatInstance inst;
    inst.B = BitMatrix(m, n);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (rng.bit()) inst.B.set(r, c, true);
    inst.v = BitVec(m);
    for (std::size_t i = 0; i < m; ++i) inst.v.set(i, rng.bit());
    return inst;
}

} // namespace

TEST_CASE("g and f: closed cases") {
    XorSatInstance inst;
    inst.B = BitMatrix::from_rows({{1, 1}, {1, 0}});
    inst.v = BitVec::from_string("10");
    CHECK(g_value(inst, BitVec::from_string("10")) == 1);
    CHECK(f_value(inst, BitVec::from_string("10")) == 0);

    // v = B z: fully satisfiable; complement: fully violated.
    const BitVec z = BitVec::from_string("01");
    inst.v = mat_vec_mul(inst.B, z);
    CHECK(g_value(inst, z) == 2);
    CHECK(f_value(inst, z) == 2);
    inst.v ^= BitVec::ones(2);
    CHECK(g_value(inst, z) == 0);
    CHECK(f_value(inst, z) == -2);

    CHECK_THROWS_AS(g_value(inst, BitVec::zeros(3)), Error);
}

TEST_CASE("f parity equals parity of m; g + violated = m") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t m = 1 + rng.below(9), n = 1 + rng.below(8);
        const XorSatInstance inst = random_instance(m, n, rng);
        for (int rep = 0; rep < 20; ++rep) {
            BitVec z(n);
            for (std::size_t i = 0; i < n; ++i) z.set(i, rng.bit());
            const int g = g_value(inst, z);
            CHECK((f_value(inst, z) & 1) == (int(m) & 1));
            CHECK(g + int(mat_vec_mul(inst.B, z).hamming(inst.v)) == int(m));
        }
    }
}

TEST_CASE("brute force: invertible square system is fully satisfiable") {
    XorSatInstance inst;
    inst.B = BitMatrix::from_rows({{1, 0, 0}, {1, 1, 0}, {0, 1, 1}});
    inst.v = BitVec::from_string("101");
    const auto r = brute_force_max(inst);
    CHECK(r.g_star == 3);
    CHECK(g_value(inst, r.z_star) == 3);
}

TEST_CASE("brute force: repeated clause") {
    XorSatInstance inst;
    inst.B = BitMatrix(5, 3);
    for (std::size_t r = 0; r < 5; ++r) inst.B.set(r, 1, true);
    inst.v = BitVec::ones(5);
    CHECK(brute_force_max(inst).g_star == 5);
}

TEST_CASE("brute force matches the naive enumerator; dominates samples") {
    Rng rng(6);
    for (int trial = 0; trial < 15; ++trial) {
        const XorSatInstance inst = random_instance(6 + rng.below(8), 8, rng);
        const auto r = brute_force_max(inst);
        CHECK(r.g_star == naive_max_g(inst));
        const int reps = trial == 0 ? 1000 : 100;
        for (int rep = 0; rep < reps; ++rep) {
            BitVec z(8);
            for (std::size_t i = 0; i < 8; ++i) z.set(i, rng.bit());
            CHECK(r.g_star >= g_value(inst, z));
        }
    }
}

TEST_CASE("brute force: deterministic lexicographic tie-break across threads") {
    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const XorSatInstance inst = random_instance(4, 9, rng);
        const auto a = brute_force_max(inst, 1);
        const auto b = brute_force_max(inst, 2);
        const auto c = brute_force_max(inst, 7);
        CHECK(a.g_star == b.g_star);
        CHECK(a.z_star == b.z_star);
        CHECK(a.z_star == c.z_star);
    }
}

TEST_CASE("brute force: cap produces a named error") {
    XorSatInstance inst;
    inst.B = BitMatrix(2, 29);
    inst.v = BitVec(2);
    try {
        brute_force_max(inst);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("28") != std::string::npos);
    }
}

TEST_CASE("count_above: endpoints and oracle match") {
    Rng rng(8);
    const XorSatInstance inst = random_instance(10, 8, rng);
    CHECK(count_above(inst, 0.0) == (1u << 8));
    CHECK(count_above(inst, 0.5) == naive_count(inst, 0.5));
    CHECK(count_above(inst, 0.7) == naive_count(inst, 0.7));

    // theta = 1 counts exact solutions: kernel-coset size or zero.
    // A consistent system: v = B z0.
    XorSatInstance sat = inst;
    sat.v = mat_vec_mul(inst.B, unpack_assignment(0x5a, 8));
    const std::size_t coset = std::size_t(1) << kernel_basis(inst.B).size();
    CHECK(count_above(sat, 1.0) == coset);
}

TEST_CASE("expected_count_formula") {
    CHECK(expected_count_formula(4, 7, 0.0) == doctest::Approx(16.0));
    CHECK(expected_count_formula(2, 2, 0.5) == doctest::Approx(3.0));

    // Exhaustive expectation over v for fixed B, n = m = 2.
    Rng rng(9);
    XorSatInstance inst = random_instance(2, 2, rng);
    double total = 0.0;
    for (std::uint32_t vv = 0; vv < 4; ++vv) {
        inst.v = unpack_assignment(vv, 2);
        total += double(count_above(inst, 0.5));
    }
    CHECK(total / 4.0 == doctest::Approx(expected_count_formula(2, 2, 0.5)));
}

TEST_CASE("expected_count_formula vs Monte Carlo over v (4 sigma)") {
    Rng rng(10);
    XorSatInstance inst = random_instance(12, 8, rng);
    const double theta = 0.6;
    const std::size_t draws = 4000;
    double sum = 0.0, sum2 = 0.0;
    for (std::size_t s = 0; s < draws; ++s) {
        Rng r2 = rng.split(s);
        for (std::size_t i = 0; i < 12; ++i) inst.v.set(i, r2.bit());
        const double c = double(count_above(inst, theta));
        sum += c;
        sum2 += c * c;
    }
    const double mean = sum / draws;
    const double var = sum2 / draws - mean * mean;
    const double sigma = std::sqrt(var / draws);
    CHECK(std::fabs(mean - expected_count_formula(8, 12, theta)) <= 4.0 * sigma);
}

TEST_CASE("enumerate_solutions endpoints") {
    Rng rng(11);
    const XorSatInstance inst = random_instance(10, 8, rng);
    CHECK(enumerate_solutions(inst, 0.0).members.size() == (1u << 8));
    const auto best = brute_force_max(inst);
    const double mu_star = double(best.g_star) / 10.0;
    CHECK(enumerate_solutions(inst, mu_star + 0.05).members.empty());
    const auto at_star = enumerate_solutions(inst, mu_star);
    bool found = false;
    for (auto z : at_star.members)
        if (unpack_assignment(z, 8) == best.z_star) found = true;
    CHECK(found);
}

TEST_CASE("d_k: closed cases and properties") {
    CHECK(dk_semimetric(BitVec::from_string("1100"), BitVec::zeros(4), 2) == 0);
    CHECK(dk_semimetric(BitVec::from_string("1000"), BitVec::zeros(4), 2) == 1);
    CHECK(dk_semimetric(BitVec::from_string("10"), BitVec::from_string("10"), 2) == 0);
    CHECK_THROWS_AS(dk_semimetric(BitVec::zeros(4), BitVec::zeros(4), 3), Error);

    Rng rng(12);
    const std::size_t n = 8, k = 2;
    for (int rep = 0; rep < 200; ++rep) {
        BitVec a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) {
            a.set(i, rng.bit());
            b.set(i, rng.bit());
        }
        CHECK(dk_semimetric(a, b, k) == dk_semimetric(b, a, k));
        CHECK(dk_semimetric(a, b, k) <= a.hamming(b));
        CHECK(dk_semimetric_packed(std::uint32_t(a.words()[0]), std::uint32_t(b.words()[0]), n, k) ==
              dk_semimetric(a, b, k));
    }
}

TEST_CASE("d_k symmetry exhaustive at n = 6, k = 3; relaxed triangle") {
    const std::size_t n = 6, k = 3;
    for (std::uint32_t a = 0; a < (1u << n); ++a)
        for (std::uint32_t b = 0; b < (1u << n); ++b) {
            CHECK(dk_semimetric_packed(a, b, n, k) == dk_semimetric_packed(b, a, n, k));
        }
    // Relaxed triangle inequality, exhaustive over all triples at n=6, k=3.
    for (std::uint32_t a = 0; a < (1u << n); ++a)
        for (std::uint32_t b = 0; b < (1u << n); ++b)
            for (std::uint32_t c = 0; c < (1u << n); ++c) {
                const auto za = unpack_assignment(a, n), zb = unpack_assignment(b, n), zc = unpack_assignment(c, n);
                REQUIRE(dk_relaxed_triangle_check(za, zb, zc, k));
            }
}
