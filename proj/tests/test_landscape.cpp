#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "xorsat/landscape.hpp"

using namespace xorsat;

namespace {

// Naive existence check for the chaos event: plain loops over the full cube,
// independent of the Gray-code machinery.
bool naive_pair_exists(const XorSatInstance& a, const XorSatInstance& b, double mu, double lo, double hi,
                       std::size_t k) {
    const std::size_t n = a.n();
    for (std::uint32_t z1 = 0; z1 < (1u << n); ++z1) {
        if (g_value(a, unpack_assignment(z1, n)) < mu * double(a.m())) continue;
        for (std::uint32_t z2 = 0; z2 < (1u << n); ++z2) {
            if (g_value(b, unpack_assignment(z2, n)) < mu * double(b.m())) continue;
            const double frac = double(dk_semimetric_packed(z1, z2, n, k)) / double(n);
            if (frac >= lo && frac <= hi) return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("overlap histogram: point masses and totals") {
    SolutionSet s1, s2;
    s1.n = s2.n = 8;
    s1.members = {0x0f};
    s2.members = {0x0f};
    const OverlapHistogram h = overlap_histogram(s1, s2, 2);
    CHECK(h.pairs == 1);
    CHECK(h.counts[0] == 1);

    s2.members = {0x01}; // d_2((00001111),(00000001)) blockwise: min(3,1)+0 = 1
    const OverlapHistogram h2 = overlap_histogram(s1, s2, 2);
    CHECK(h2.counts[2 * dk_semimetric_packed(0x0f, 0x01, 8, 2)] == 1);
}

TEST_CASE("overlap histogram: full cube vs exhaustive oracle at n=8, k=2") {
    SolutionSet full;
    full.n = 8;
    for (std::uint32_t z = 0; z < 256; ++z) full.members.push_back(z);
    const OverlapHistogram h = overlap_histogram(full, full, 2);
    CHECK(h.pairs == 65536);
    std::vector<std::uint64_t> oracle(9, 0);
    for (std::uint32_t a = 0; a < 256; ++a)
        for (std::uint32_t b = 0; b < 256; ++b) ++oracle[dk_semimetric_packed(a, b, 8, 2)];
    std::uint64_t total = 0;
    for (std::size_t d = 0; d <= 4; ++d) {
        CHECK(h.counts[2 * d] == oracle[d]);
        total += h.counts[2 * d];
    }
    CHECK(total == h.pairs);
}

TEST_CASE("overlap histogram: associative merge across trials") {
    SolutionSet s1, s2;
    s1.n = s2.n = 8;
    s1.members = {0x0f, 0x33};
    s2.members = {0x01};
    OverlapHistogram a = overlap_histogram(s1, s2, 2);
    const OverlapHistogram b = overlap_histogram(s2, s2, 2);
    a.merge(b);
    CHECK(a.trials == 2);
    CHECK(a.pairs == 3);
    std::uint64_t total = 0;
    for (auto c : a.counts) total += c;
    CHECK(total == a.pairs);
}

TEST_CASE("tuple_exists: shortcuts, exhaustive search, budget") {
    SolutionSet a, b, c;
    a.n = b.n = c.n = 8;
    a.members = {1, 2};
    b.members = {2, 3};
    c.members = {2, 9};
    CHECK(tuple_exists({a, b, c}, 2, 0) == true); // common member 2

    SolutionSet d;
    d.n = 8;
    d.members = {0x0f};
    SolutionSet e;
    e.n = 8;
    e.members = {0x01};
    CHECK(tuple_exists({d, e}, 2, 0) == false);
    CHECK(tuple_exists({d, e}, 2, 1) == true);
    CHECK(tuple_exists({d, SolutionSet{8, 0.0, {}}}, 2, 8) == false); // an empty set

    CHECK_FALSE(tuple_exists({d, e}, 2, 0, 0).has_value()); // budget exhausted -> unknown
}

TEST_CASE("chaos probe: endpoints and naive-oracle agreement") {
    Rng rng(1);
    const BitMatrix h = sample_gallager(12, 3, 6, rng); // inst m=12, n=6
    const BitMatrix b = h.transposed();

    Rng r1(2);
    const ProbeResult trivial = chaos_probe(b, 2, 0.0, 0.49, 20, 3, r1);
    CHECK(trivial.frequency() == doctest::Approx(1.0));

    Rng r2(3);
    const ProbeResult impossible = chaos_probe(b, 2, 1.01, 0.49, 20, 3, r2);
    CHECK(impossible.frequency() == doctest::Approx(0.0));

    // Same trial seeds across a mu-grid: frequencies are non-increasing by
    // set inclusion, exactly.
    double prev = 1.1;
    for (double mu : {0.4, 0.55, 0.7, 0.8, 0.9}) {
        Rng rr(4);
        const double f = chaos_probe(b, 2, mu, 0.2, 40, 3, rr).frequency();
        CHECK(f <= prev + 1e-15);
        prev = f;
    }

    // Trial-by-trial agreement with the naive double loop.
    for (std::size_t trial = 0; trial < 25; ++trial) {
        Rng base(5);
        Rng tr = base.split(trial);
        XorSatInstance i1, i2;
        i1.B = b;
        i2.B = b;
        i1.v = BitVec(12);
        i2.v = BitVec(12);
        for (std::size_t i = 0; i < 12; ++i) i1.v.set(i, tr.bit());
        for (std::size_t i = 0; i < 12; ++i) i2.v.set(i, tr.bit());
        const double mu = 0.7;
        const SolutionSet s1 = enumerate_solutions(i1, mu), s2 = enumerate_solutions(i2, mu);
        std::optional<bool> fast;
        if (s1.members.empty() || s2.members.empty())
            fast = false;
        else
            fast = tuple_exists({s1, s2}, 3, std::size_t(std::floor(0.2 * 6)));
        REQUIRE(fast.has_value());
        REQUIRE(*fast == naive_pair_exists(i1, i2, mu, 0.0, std::floor(0.2 * 6) / 6.0, 3));
    }
}

TEST_CASE("ogp probe: endpoints and monotonicity in mu") {
    GallagerParams params{12, 3, 6};
    Rng r1(6);
    CHECK(ogp_probe(0.5, 0.0, 0.0, 0.4999, 15, params, r1).frequency() == doctest::Approx(1.0));

    // A band holding no attainable d_k/n value: values are multiples of 1/6.
    Rng r2(7);
    CHECK(ogp_probe(0.5, 0.0, 0.21, 0.24, 15, params, r2).frequency() == doctest::Approx(0.0));

    double prev = 1.1;
    for (double mu : {0.5, 0.7, 0.85, 0.95}) {
        Rng rr(8);
        const double f = ogp_probe(0.7, mu, 0.0, 0.3, 30, params, rr).frequency();
        CHECK(f <= prev + 1e-15);
        prev = f;
    }
}

TEST_CASE("interpolation sweep: shared start, chaos-geometry end") {
    Rng rng(9);
    const BitMatrix h = sample_gallager(12, 3, 6, rng);
    const BitMatrix b = h.transposed();
    Rng sr(10);
    const auto traces = interpolation_overlap_sweep(b, 3, 4, 0.6, 3, sr);
    // rows: (Q+1) * C(T,2)
    CHECK(traces.size() == 5 * 3);
    for (const auto& t : traces) {
        if (t.q == 0 && t.min_overlap) CHECK(*t.min_overlap == doctest::Approx(0.0));
    }
    // q=0 columns share the parity vector, so the same solution appears on
    // both sides whenever the set is non-empty.
    Rng sr2(10); // replay: same path
    const InterpolationPath path = interpolation_path(b, 3, 4, sr2);
    XorSatInstance i0;
    i0.B = b;
    i0.v = path.grid[0][0];
    const bool has_solution = !enumerate_solutions(i0, 0.6).members.empty();
    for (const auto& t : traces)
        if (t.q == 0) CHECK(t.min_overlap.has_value() == has_solution);
}

TEST_CASE("concentration probe: single-clause degenerate case") {
    BitMatrix b(1, 4);
    b.set(0, 2, true); // one nonzero clause: always satisfiable
    Rng rng(11);
    const ConcentrationResult r = concentration_probe(b, 60, rng);
    CHECK(r.mean == doctest::Approx(1.0));
    CHECK(r.stddev == doctest::Approx(0.0));
}

TEST_CASE("concentration probe: determinism and shrinking spread (reported)") {
    Rng hr(12);
    double prev_sigma = 1e9;
    for (std::size_t m : {8, 32}) {
        const BitMatrix h = sample_gallager(m, 3, 4, hr);
        Rng r1(13), r2(13);
        const auto a = concentration_probe(h.transposed(), 40, r1);
        const auto b = concentration_probe(h.transposed(), 40, r2);
        CHECK(a.mean == b.mean);
        CHECK(a.stddev == b.stddev);
        CHECK(a.stddev < prev_sigma);
        prev_sigma = a.stddev;
    }
}
