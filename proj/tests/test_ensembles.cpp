#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>

#include "xorsat/serialize.hpp"

using namespace xorsat;

TEST_CASE("gallager: dimensions and exact regularity") {
    Rng rng(1);
    const BitMatrix h = sample_gallager(6, 3, 3, rng);
    CHECK(h.rows() == 6);
    CHECK(h.cols() == 6);
    for (std::size_t r = 0; r < 6; ++r) CHECK(h.row_weight(r) == 3);
    for (std::size_t c = 0; c < 6; ++c) CHECK(h.col_weight(c) == 3);
}

TEST_CASE("gallager: m/d = 1 forces all-ones rows") {
    Rng rng(2);
    const BitMatrix h = sample_gallager(4, 3, 4, rng);
    CHECK(h.rows() == 3);
    CHECK(h.cols() == 4);
    for (std::size_t r = 0; r < 3; ++r) CHECK(h.row_weight(r) == 4);
    for (std::size_t c = 0; c < 4; ++c) CHECK(h.col_weight(c) == 3);
}

TEST_CASE("gallager: preconditions") {
    Rng rng(3);
    CHECK_THROWS_AS(sample_gallager(6, 3, 5, rng), Error); // 5 does not divide 6
    CHECK_THROWS_AS(sample_gallager(6, 2, 3, rng), Error); // k < 3
}

TEST_CASE("gallager: regularity across a parameter grid (10^3 samples)") {
    Rng rng(4);
    const std::size_t grid[][3] = {{8, 3, 4}, {12, 3, 6}, {12, 4, 4}, {20, 5, 10}, {24, 4, 8}};
    for (const auto& g : grid) {
        for (int rep = 0; rep < 200; ++rep) {
            const BitMatrix h = sample_gallager(g[0], g[1], g[2], rng);
            CHECK(h.rows() == g[0] * g[1] / g[2]);
            for (std::size_t r = 0; r < h.rows(); ++r) REQUIRE(h.row_weight(r) == g[2]);
            for (std::size_t c = 0; c < h.cols(); ++c) REQUIRE(h.col_weight(c) == g[1]);
        }
    }
}

TEST_CASE("gallager: each layer restricts to a (1,d)-regular graph") {
    Rng rng(5);
    const std::size_t m = 12, k = 3, d = 4;
    const BitMatrix h = sample_gallager(m, k, d, rng);
    const std::size_t per_layer = m / d;
    for (std::size_t layer = 0; layer < k; ++layer) {
        std::vector<std::size_t> rows(per_layer);
        for (std::size_t i = 0; i < per_layer; ++i) rows[i] = layer * per_layer + i;
        const BitMatrix sub = restrict_rows(h, rows);
        for (std::size_t c = 0; c < m; ++c) CHECK(sub.col_weight(c) == 1);
    }
}

TEST_CASE("bernoulli: endpoints and preconditions") {
    Rng rng(6);
    const BitMatrix z = sample_bernoulli(10, 0.5, 0.0, rng);
    CHECK(z.rows() == 5);
    for (std::size_t r = 0; r < z.rows(); ++r) CHECK(z.row_weight(r) == 0);
    const BitMatrix o = sample_bernoulli(10, 0.5, 1.0, rng);
    for (std::size_t r = 0; r < o.rows(); ++r) CHECK(o.row_weight(r) == 10);
    CHECK_THROWS_AS(sample_bernoulli(10, 0.5, 1.5, rng), Error);
    CHECK_THROWS_AS(sample_bernoulli(10, 0.55, 0.5, rng), Error); // 5.5 rows not integral
}

TEST_CASE("bernoulli: empirical entry mean within 4 sigma") {
    Rng rng(7);
    const std::size_t m = 20, samples = 1000;
    std::size_t ones = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        const BitMatrix h = sample_bernoulli(m, 1.0, 0.5, rng);
        for (std::size_t r = 0; r < h.rows(); ++r) ones += h.row_weight(r);
    }
    const double total = double(samples) * m * m;
    const double mean = double(ones) / total;
    const double sigma = std::sqrt(0.25 / total);
    CHECK(std::fabs(mean - 0.5) <= 4.0 * sigma);
}

TEST_CASE("right-regular: endpoints and support frequencies") {
    Rng rng(8);
    const BitMatrix all = sample_right_regular(6, 1.0, 6, rng);
    for (std::size_t r = 0; r < all.rows(); ++r) CHECK(all.row_weight(r) == 6);
    const BitMatrix none = sample_right_regular(6, 1.0, 0, rng);
    for (std::size_t r = 0; r < none.rows(); ++r) CHECK(none.row_weight(r) == 0);
    CHECK_THROWS_AS(sample_right_regular(6, 1.0, 7, rng), Error);

    // m=6, d=2: all 15 supports near-uniform over 10^4 rows (4 sigma).
    std::map<std::uint64_t, std::size_t> freq;
    const std::size_t rows_total = 10000;
    for (std::size_t s = 0; s < rows_total; ++s) {
        const BitMatrix h = sample_right_regular(6, 1.0 / 6.0, 2, rng);
        REQUIRE(h.rows() == 1);
        REQUIRE(h.row_weight(0) == 2);
        freq[h.row(0).words()[0]]++;
    }
    CHECK(freq.size() == 15);
    const double p = 1.0 / 15.0;
    const double sigma = std::sqrt(p * (1 - p) * rows_total);
    for (const auto& [support, count] : freq) {
        (void)support;
        CHECK(std::fabs(double(count) - p * rows_total) <= 4.0 * sigma);
    }
}

TEST_CASE("sample_instance: transpose, metadata, reproducibility") {
    Rng rng(9);
    const BitMatrix h = sample_gallager(6, 3, 3, rng);
    Rng ra(77), rb(77);
    const XorSatInstance a = sample_instance(h, ra, "gallager");
    const XorSatInstance b = sample_instance(h, rb, "gallager");
    CHECK(a.m() == 6);
    CHECK(a.n() == 6);
    CHECK(a.k == 3);
    CHECK(a.d == 3);
    CHECK(a.B == h.transposed());
    CHECK(a.v == b.v); // fixed seed reproducibility
    for (std::size_t r = 0; r < a.m(); ++r) CHECK(a.B.row_weight(r) == 3);
}

TEST_CASE("sample_instance: parity marginals within 4 sigma") {
    Rng hr(10);
    const BitMatrix h = sample_gallager(8, 3, 4, hr);
    const std::size_t draws = 10000;
    std::vector<std::size_t> ones(8, 0);
    for (std::size_t s = 0; s < draws; ++s) {
        Rng rng = hr.split(s);
        const XorSatInstance inst = sample_instance(h, rng, "gallager");
        for (std::size_t i = 0; i < 8; ++i) ones[i] += inst.v.get(i);
    }
    const double sigma = std::sqrt(0.25 * draws);
    for (std::size_t i = 0; i < 8; ++i) CHECK(std::fabs(double(ones[i]) - 0.5 * draws) <= 4.0 * sigma);
}

TEST_CASE("correlate: kappa endpoints and the agreement window") {
    Rng hr(11);
    const BitMatrix h = sample_gallager(10, 3, 5, hr);
    Rng rng(12);
    XorSatInstance inst = sample_instance(h, rng, "gallager");

    const CorrelatedFamily same = correlate(inst, 0.0, 3, rng);
    CHECK(same.parities.size() == 3);
    CHECK(same.parities[1] == inst.v);
    CHECK(same.parities[2] == inst.v);
    CHECK_THROWS_AS(correlate(inst, -0.1, 2, rng), Error);
    CHECK_THROWS_AS(correlate(inst, 0.5, 1, rng), Error);

    // kappa = 0.5, m = 10: parities agree exactly on 1-indexed coords 6..10.
    const CorrelatedFamily half = correlate(inst, 0.5, 2, rng);
    for (std::size_t i = 5; i < 10; ++i) CHECK(half.parities[1].get(i) == inst.v.get(i));

    // kappa = 1: fresh uniform second parity, independent of the first.
    const std::size_t draws = 10000;
    std::vector<std::size_t> ones(10, 0), agree(10, 0);
    for (std::size_t s = 0; s < draws; ++s) {
        Rng r2 = rng.split(s);
        const CorrelatedFamily fam = correlate(inst, 1.0, 2, r2);
        for (std::size_t i = 0; i < 10; ++i) {
            ones[i] += fam.parities[1].get(i);
            agree[i] += fam.parities[1].get(i) == inst.v.get(i);
        }
    }
    const double sigma = std::sqrt(0.25 * draws);
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK(std::fabs(double(ones[i]) - 0.5 * draws) <= 4.0 * sigma);
        CHECK(std::fabs(double(agree[i]) - 0.5 * draws) <= 4.0 * sigma);
    }
}

TEST_CASE("interpolation path: endpoints and step locality") {
    Rng hr(13);
    const BitMatrix b = sample_gallager(8, 3, 4, hr).transposed();
    Rng rng(14);
    const std::size_t T = 3, Q = 3, m = b.rows();
    const InterpolationPath path = interpolation_path(b, T, Q, rng);
    REQUIRE(path.grid.size() == T);
    for (std::size_t t = 0; t < T; ++t) REQUIRE(path.grid[t].size() == Q + 1);
    for (std::size_t t = 1; t < T; ++t) CHECK(path.grid[t][0] == path.grid[0][0]);
    for (std::size_t t = 0; t < T; ++t)
        for (std::size_t q = 0; q < Q; ++q)
            CHECK(path.grid[t][q].hamming(path.grid[t][q + 1]) <= (m + Q - 1) / Q);
}

TEST_CASE("interpolation path: Q=1 endpoints, q=Q independence stats") {
    Rng hr(15);
    const BitMatrix b = sample_gallager(8, 3, 4, hr).transposed();
    const std::size_t draws = 8000, m = b.rows();
    std::vector<std::size_t> ones(m, 0), agree(m, 0);
    Rng rng(16);
    for (std::size_t s = 0; s < draws; ++s) {
        Rng r2 = rng.split(s);
        const InterpolationPath path = interpolation_path(b, 2, 1, r2);
        CHECK(path.grid[0][0] == path.grid[1][0]);
        for (std::size_t i = 0; i < m; ++i) {
            ones[i] += path.grid[0][1].get(i);
            agree[i] += path.grid[0][1].get(i) == path.grid[1][1].get(i);
        }
    }
    const double sigma = std::sqrt(0.25 * draws);
    for (std::size_t i = 0; i < m; ++i) {
        CHECK(std::fabs(double(ones[i]) - 0.5 * draws) <= 4.0 * sigma);
        CHECK(std::fabs(double(agree[i]) - 0.5 * draws) <= 4.0 * sigma);
    }
}

TEST_CASE("restrict_rows and sparsities") {
    const BitMatrix h = BitMatrix::from_rows({{1, 1, 0}, {0, 1, 1}});
    std::vector<std::size_t> all{0, 1};
    CHECK(restrict_rows(h, all) == h);
    CHECK(restrict_rows(h, {}).rows() == 0);
    CHECK_THROWS_AS(restrict_rows(h, {5}), Error);
    CHECK(sparsities(h) == std::pair<std::size_t, std::size_t>{2, 2});
    CHECK(sparsities(BitMatrix(3, 4)) == std::pair<std::size_t, std::size_t>{0, 0});
    Rng rng(17);
    const BitMatrix g = sample_gallager(12, 3, 6, rng);
    CHECK(sparsities(g) == std::pair<std::size_t, std::size_t>{3, 6});
}

TEST_CASE("restrictability probe") {
    Rng rng(18);
    const BitMatrix h = sample_gallager(24, 3, 3, rng); // 24 x 24
    CHECK_THROWS_AS(restrictability_probe(h, 0.17, 6), Error); // 0.17*24 not integral

    const CodeReport full = restrictability_probe(h, 1.0, 6);
    CHECK(full.rows_used == 24);
    CHECK(full.restricted_distance == code_distance_exact(h, 6));

    const CodeReport none = restrictability_probe(h, 0.0, 6);
    CHECK(none.restricted_distance == 1); // no checks left: unit vectors join the kernel

    const CodeReport third = restrictability_probe(h, 1.0 / 3.0, 6);
    std::vector<std::size_t> first(8);
    for (std::size_t i = 0; i < 8; ++i) first[i] = i;
    CHECK(third.restricted_distance == code_distance_exact(restrict_rows(h, first), 6));
}

TEST_CASE("girth>4 biregular builder") {
    Rng rng(19);
    const BitMatrix b = sample_girth4_biregular(12, 3, 4, rng);
    CHECK(b.rows() == 16);
    for (std::size_t r = 0; r < b.rows(); ++r) REQUIRE(b.row_weight(r) == 3);
    for (std::size_t c = 0; c < b.cols(); ++c) REQUIRE(b.col_weight(c) == 4);
    for (std::size_t r1 = 0; r1 < b.rows(); ++r1)
        for (std::size_t r2 = r1 + 1; r2 < b.rows(); ++r2) {
            const std::size_t w1 = b.row(r1).weight(), w2 = b.row(r2).weight();
            const std::size_t shared = (w1 + w2 - (b.row(r1) ^ b.row(r2)).weight()) / 2;
            REQUIRE(shared <= 1);
        }
    CHECK_THROWS_AS(sample_girth4_biregular(6, 4, 8, rng), Error); // pair budget
}

TEST_CASE("instance JSON: schema fields and byte-identical round trip") {
    Rng rng(20);
    const BitMatrix h = sample_gallager(12, 3, 6, rng);
    Rng ir(21);
    XorSatInstance inst = sample_instance(h, ir, "gallager");
    inst.seed = 21;
    const std::string text = instance_to_json(inst);
    CHECK(text.find("\"m\":12") != std::string::npos);
    CHECK(text.find("\"n\":6") != std::string::npos);
    CHECK(text.find("\"ensemble\":\"gallager\"") != std::string::npos);
    CHECK(text.find("\"B_rows\":[[") != std::string::npos);

    const XorSatInstance back = instance_from_json(text);
    CHECK(back.B == inst.B);
    CHECK(back.v == inst.v);
    CHECK(instance_to_json(back) == text);

    CHECK_THROWS_AS(instance_from_json("{broken"), Error);
}
