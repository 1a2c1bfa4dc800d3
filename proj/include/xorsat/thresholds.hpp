#pragma once

#include <cstddef>

#include "xorsat/numerics.hpp"

namespace xorsat {

// Binary entropy and its inverse on the codomain [0, 1/2].
double h2(double x);
double h2_inv(double y);

// W.h.p. maximum satisfiable fraction 1 - H2^{-1}(1 - 1/lambda); lambda > 1.
double theta_star(double lambda);

// Large-lambda expansion 1/2 + sqrt(ln 2 / (2 lambda)), exposed for
// comparison tables.
double theta_star_expansion(double lambda);

// Maximal efficiently decodable error-weight fraction H2^{-1}(c*/(k lambda)).
double ell_star_fraction(double k, double lambda, double c_star);

// Fraction beyond which a decoding-limited DQI is topologically obstructed:
// 1 - H2^{-1}(1 - 4 c* log2(k)/(k lambda)).
double mu_top(double k, double lambda, double c_star);

// Asymptotic comparator 1/2 + sqrt(2 c* ln(k)/(k lambda)).
double mu_top_expansion(double k, double lambda, double c_star);

// Semicircle value at the decodable fraction: the expected-fraction ceiling
// of DQI under the folklore decoding threshold.
double dqi_expected_bound(double k, double lambda, double c_star);

// Chaos-property threshold 1 - H2^{-1}(1 - 1/(R lambda) - (1/lambda)(1 -
// 1/R) H2(nu2)).
double chaos_threshold(std::size_t r_count, double lambda, double nu2);

// 2-OGP threshold 1 - H2^{-1}(1 - 1/(2 lambda) - H2(nu2)/(2 lambda) -
// (2e/ln 2) e^{-nu1 k}); fails when the inner argument leaves [0, 1].
double ogp2_threshold(double k, double lambda, double nu1, double nu2);

// First-moment exponents whose sign changes locate the thresholds above:
//   Psi  = 1 + H2(nu2) + 2 lambda H2(mu) - 2 lambda + (4 e lambda / ln 2) e^{-nu1 k}
//   Psit = 1 + (R-1) H2(nu2) + R lambda H2(mu) - R lambda
double varpsi(double mu, double nu1, double nu2, double lambda, double k);
double varpsi_tilde(double mu, double nu2, double lambda, std::size_t r_count);

// Fitted message-passing value 1/2 + sqrt(0.882 ln(k)/(k lambda)).
double amp_fitted(double k, double lambda);

} // namespace xorsat
