#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>

#include "xorsat/report.hpp"
#include "xorsat/thresholds.hpp"

using namespace xorsat;

TEST_CASE("h2 and its inverse") {
    CHECK(h2(0.5) == doctest::Approx(1.0));
    CHECK(h2(0.0) == 0.0);
    CHECK(h2(1.0) == 0.0);
    CHECK(h2_inv(0.0) == 0.0);
    CHECK(h2_inv(1.0) == 0.5);
    CHECK(h2_inv(0.5) == doctest::Approx(0.1100).epsilon(1e-3));
    CHECK(h2(0.1100) == doctest::Approx(0.5000).epsilon(1e-3));
    for (double y = 0.0; y <= 1.0; y += 0.01) CHECK(std::fabs(h2(h2_inv(y)) - y) <= 1e-10);
    for (double x = 0.0; x <= 0.5; x += 0.01) CHECK(std::fabs(h2_inv(h2(x)) - x) <= 1e-10);
    CHECK_THROWS_AS(h2(-0.1), Error);
    CHECK_THROWS_AS(h2_inv(1.2), Error);
}

TEST_CASE("theta_star") {
    CHECK(theta_star(1.0000001) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(theta_star(2.0) == doctest::Approx(0.8900).epsilon(1e-3));
    CHECK_THROWS_AS(theta_star(1.0), Error);
    // decreasing in lambda; expansion error shrinks monotonically on a grid
    double prev = 2.0, prev_err = 1e9;
    for (double lam = 1.5; lam <= 200.0; lam *= 2.0) {
        const double t = theta_star(lam);
        CHECK(t < prev);
        prev = t;
        const double err = std::fabs(t - theta_star_expansion(lam));
        CHECK(err < prev_err);
        prev_err = err;
    }
}

TEST_CASE("ell_star_fraction tracks the equivalent log form at large k (reported)") {
    // c*(1-r)/(k log2(k/(1-r))) with 1-r = 1/lambda; ratio tends to 1.
    double prev_ratio_err = 1e9;
    for (double k : {16.0, 64.0, 256.0, 1024.0, 4096.0}) {
        const double exact = ell_star_fraction(k, 2.0, 1.0);
        const double logform = (1.0 / 2.0) / (k * std::log2(k * 2.0));
        const double ratio = exact / logform;
        std::printf("k=%6.0f ell*/m=%.3e logform=%.3e ratio=%.3f\n", k, exact, logform, ratio);
        CHECK(std::fabs(ratio - 1.0) < prev_ratio_err + 1e-12);
        prev_ratio_err = std::fabs(ratio - 1.0);
    }
    // mu_top against its asymptotic comparator, also reported
    for (double k : {64.0, 1024.0})
        std::printf("k=%6.0f mu_top=%.4f expansion=%.4f\n", k, mu_top(k, 2.0, 1.0), mu_top_expansion(k, 2.0, 1.0));
}

TEST_CASE("ell_star_fraction") {
    CHECK(ell_star_fraction(3.0, 1.0 / 3.0, 1.0) == doctest::Approx(0.5)); // c*/(k lambda) = 1
    const double v = ell_star_fraction(8.0, 2.0, 1.0);
    // independent bisection for H2(x) = 1/16
    double lo = 0.0, hi = 0.5;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (h2(mid) < 1.0 / 16.0 ? lo : hi) = mid;
    }
    CHECK(v == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-9));
    CHECK_THROWS_AS(ell_star_fraction(3.0, 0.1, 1.0), Error); // argument above 1
}

TEST_CASE("mu_top") {
    CHECK_THROWS_AS(mu_top(4.0, 2.0, 1.0), Error); // 4 c* log2(k)/(k lambda) = 1
    const double v16 = mu_top(16.0, 2.0, 1.0);
    CHECK(v16 == doctest::Approx(1.0 - h2_inv(1.0 - 4.0 * 4.0 / 32.0)).epsilon(1e-12));
    CHECK(v16 > 0.5);
    // decreasing in k beyond small k at lambda = 2, c* = 1
    double prev = 1.0;
    for (double k = 8.0; k <= 4096.0; k *= 2.0) {
        const double v = mu_top(k, 2.0, 1.0);
        CHECK(v < prev);
        CHECK(v > 0.5);
        prev = v;
    }
}

TEST_CASE("dqi_expected_bound") {
    CHECK(dqi_expected_bound(8.0, 2.0, 0.0) == doctest::Approx(0.5)); // ell*/m = 0
    const double v = dqi_expected_bound(8.0, 2.0, 1.0);
    CHECK(v == doctest::Approx(semicircle_value(ell_star_fraction(8.0, 2.0, 1.0))));
    for (double k = 4.0; k <= 1024.0; k *= 2.0) CHECK(dqi_expected_bound(k, 2.0, 1.0) <= 1.0);
}

TEST_CASE("chaos_threshold") {
    const double lam = 2.0;
    // nu2 -> 0 at R=2 approaches 1 - h2_inv(1 - 1/(2 lambda))
    CHECK(chaos_threshold(2, lam, 1e-12) == doctest::Approx(1.0 - h2_inv(1.0 - 1.0 / (2.0 * lam))).epsilon(1e-6));
    const double v = chaos_threshold(2, lam, 0.25);
    const double direct = 1.0 - h2_inv(1.0 - 1.0 / (2.0 * lam) - (1.0 / lam) * 0.5 * h2(0.25));
    CHECK(v == doctest::Approx(direct).epsilon(1e-12));
    double prev = 0.0;
    for (double nu2 = 0.01; nu2 < 0.5; nu2 += 0.02) {
        const double t = chaos_threshold(2, lam, nu2);
        CHECK(t > prev);
        prev = t;
    }
    CHECK_THROWS_AS(chaos_threshold(1, lam, 0.1), Error);
}

TEST_CASE("ogp2_threshold and varpsi root consistency") {
    const double lam = 2.0;
    // nu1*k large, nu2 -> 0 approaches the same limit as chaos at R=2
    CHECK(ogp2_threshold(400.0, lam, 0.5, 1e-12) ==
          doctest::Approx(1.0 - h2_inv(1.0 - 1.0 / (2.0 * lam))).epsilon(1e-6));
    CHECK_THROWS_AS(ogp2_threshold(3.0, lam, 0.1, 0.2), Error); // exponential term exceeds the budget

    // the running band choice nu1 = 0.1, nu2 = 0.1 + 1/ln(k)^2 at k = 50
    const double nu2_50 = 0.1 + 1.0 / (std::log(50.0) * std::log(50.0));
    const double mu50 = ogp2_threshold(50.0, lam, 0.1, nu2_50);
    CHECK(mu50 > 0.5);
    CHECK(mu50 < 1.0);
    std::printf("ogp2 threshold at k=50, lambda=2, running band: %.6f\n", mu50);

    for (double k : {30.0, 50.0, 80.0}) {
        for (double nu2 : {0.12, 0.2, 0.3}) {
            const double mu = ogp2_threshold(k, lam, 0.1, nu2);
            CHECK(std::fabs(varpsi(mu, 0.1, nu2, lam, k)) <= 1e-9);
        }
    }
}

TEST_CASE("varpsi at mu = 1/2 and the tilde comparison") {
    const double lam = 2.0;
    for (double nu2 : {0.1, 0.3}) {
        for (double k : {10.0, 40.0}) {
            const double v = varpsi(0.5, 0.1, nu2, lam, k);
            const double expect = 1.0 + h2(nu2) + (4.0 * std::exp(1.0) * lam / std::log(2.0)) * std::exp(-0.1 * k);
            CHECK(v == doctest::Approx(expect).epsilon(1e-12));
            CHECK(v > 0.0);
        }
    }
    Rng rng(4);
    for (int rep = 0; rep < 3000; ++rep) {
        const double mu = rng.real53();
        const double nu1 = 0.5 * rng.real53();
        const double nu2 = rng.real53();
        const double lamr = 1.0 + 4.0 * rng.real53();
        const double k = 3.0 + 60.0 * rng.real53();
        REQUIRE(varpsi_tilde(mu, nu2, lamr, 2) <= varpsi(mu, nu1, nu2, lamr, k) + 1e-12);
    }
}

TEST_CASE("amp_fitted") {
    CHECK(amp_fitted(std::exp(1.0), 2.0) == doctest::Approx(0.5 + std::sqrt(0.882 / (std::exp(1.0) * 2.0))));
    CHECK(amp_fitted(8.0, 1e9) == doctest::Approx(0.5).epsilon(1e-4));
    CHECK_THROWS_AS(amp_fitted(1.0, 2.0), Error);
    // dominates the DQI bound for all k at lambda = 2, c* = 1 (crossover at
    // the smallest admissible k; the acceptance table records it)
    for (double k = 4.0; k <= 4096.0; k *= 2.0) CHECK(amp_fitted(k, 2.0) > dqi_expected_bound(k, 2.0, 1.0));
}

TEST_CASE("thresholds_csv: header, domain holes, spot row") {
    ThresholdOptions opt;
    opt.with_qaoa_opt = false; // keep the unit test fast
    const std::string csv = thresholds_csv({4.0, 16.0}, opt);
    CHECK(csv.rfind("k,lambda,c_star,theta_star,ell_star,dqi_bound,mu_top,chaos_mu,ogp2_mu,qaoa1_opt,amp_fit\n", 0) ==
          0);
    // k = 4 row: mu_top out of domain -> nan
    const std::size_t row1 = csv.find("\n4,");
    const std::size_t row2 = csv.find("\n16,");
    REQUIRE(row1 != std::string::npos);
    REQUIRE(row2 != std::string::npos);
    const std::string r4 = csv.substr(row1 + 1, csv.find('\n', row1 + 1) - row1 - 1);
    CHECK(r4.find("nan") != std::string::npos);
    const std::string r16 = csv.substr(row2 + 1, csv.find('\n', row2 + 1) - row2 - 1);
    CHECK(r16.find(format_double(mu_top(16.0, 2.0, 1.0))) != std::string::npos);
    CHECK(r16.find(format_double(theta_star(2.0))) != std::string::npos);
}

TEST_CASE("wilson interval sanity") {
    const auto [lo, hi] = wilson_interval(50, 100, 1.96);
    CHECK(lo == doctest::Approx(0.404).epsilon(0.01));
    CHECK(hi == doctest::Approx(0.596).epsilon(0.01));
    const auto [lo0, hi0] = wilson_interval(0, 100, 1.96);
    CHECK(lo0 == 0.0);
    CHECK(hi0 < 0.05);
}
