#include "xorsat/thresholds.hpp"

#include <cmath>

#include "xorsat/dqi.hpp"

namespace xorsat {

double h2(double x) { return binary_entropy(x); }
double h2_inv(double y) { return binary_entropy_inv(y); }

double theta_star(double lambda) {
    if (lambda <= 1.0) fail(ErrCode::domain, "theta_star: requires lambda > 1");
    return 1.0 - h2_inv(1.0 - 1.0 / lambda);
}

double theta_star_expansion(double lambda) { return 0.5 + std::sqrt(std::log(2.0) / (2.0 * lambda)); }

double ell_star_fraction(double k, double lambda, double c_star) {
    if (k < 3.0) fail(ErrCode::domain, "ell_star_fraction: requires k >= 3");
    const double arg = c_star / (k * lambda);
    if (arg < 0.0 || arg > 1.0) fail(ErrCode::domain, "ell_star_fraction: c*/(k lambda) outside [0,1]");
    return h2_inv(arg);
}

double mu_top(double k, double lambda, double c_star) {
    const double arg = 4.0 * c_star * std::log2(k) / (k * lambda);
    if (arg >= 1.0 || arg < 0.0) fail(ErrCode::domain, "mu_top: requires 4 c* log2(k)/(k lambda) < 1");
    return 1.0 - h2_inv(1.0 - arg);
}

double mu_top_expansion(double k, double lambda, double c_star) {
    return 0.5 + std::sqrt(2.0 * c_star * std::log(k) / (k * lambda));
}

double dqi_expected_bound(double k, double lambda, double c_star) {
    return semicircle_value(ell_star_fraction(k, lambda, c_star));
}

double chaos_threshold(std::size_t r_count, double lambda, double nu2) {
    if (r_count < 2) fail(ErrCode::domain, "chaos_threshold: requires R >= 2");
    const double r = double(r_count);
    const double arg = 1.0 - 1.0 / (r * lambda) - (1.0 / lambda) * (1.0 - 1.0 / r) * h2(nu2);
    if (arg < 0.0 || arg > 1.0) fail(ErrCode::domain, "chaos_threshold: inner argument outside [0,1]");
    return 1.0 - h2_inv(arg);
}

double ogp2_threshold(double k, double lambda, double nu1, double nu2) {
    const double arg =
        1.0 - 1.0 / (2.0 * lambda) - h2(nu2) / (2.0 * lambda) - (2.0 * std::exp(1.0) / std::log(2.0)) * std::exp(-nu1 * k);
    if (arg < 0.0 || arg > 1.0) fail(ErrCode::domain, "ogp2_threshold: inner argument outside [0,1]");
    return 1.0 - h2_inv(arg);
}

double varpsi(double mu, double nu1, double nu2, double lambda, double k) {
    return 1.0 + h2(nu2) + 2.0 * lambda * h2(mu) - 2.0 * lambda +
           (4.0 * std::exp(1.0) * lambda / std::log(2.0)) * std::exp(-nu1 * k);
}

double varpsi_tilde(double mu, double nu2, double lambda, std::size_t r_count) {
    const double r = double(r_count);
    return 1.0 + (r - 1.0) * h2(nu2) + r * lambda * h2(mu) - r * lambda;
}

double amp_fitted(double k, double lambda) {
    if (k < 2.0) fail(ErrCode::domain, "amp_fitted: requires k >= 2");
    return 0.5 + std::sqrt(0.882 * std::log(k) / (k * lambda));
}

} // namespace xorsat
