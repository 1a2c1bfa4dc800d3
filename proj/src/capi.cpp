#include "xorsat.h"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

#include "xorsat/qaoa.hpp"
#include "xorsat/report.hpp"
#include "xorsat/selftest.hpp"
#include "xorsat/serialize.hpp"
#include "xorsat/thresholds.hpp"

struct xs_instance {
    xorsat::XorSatInstance impl;
};

namespace {

thread_local std::string g_last_error;

xs_status status_of(const xorsat::Error& e) {
    switch (e.code()) {
        case xorsat::ErrCode::invalid_argument: return XS_EINVAL;
        case xorsat::ErrCode::domain: return XS_EDOMAIN;
        case xorsat::ErrCode::syndrome_collision: return XS_ECOLLISION;
        case xorsat::ErrCode::unknown_syndrome: return XS_EUNKNOWN_SYNDROME;
        case xorsat::ErrCode::cap_exceeded: return XS_ECAP;
        case xorsat::ErrCode::parse: return XS_EPARSE;
        default: return XS_ENUMERIC;
    }
}

template <typename F>
xs_status guarded(F&& body) {
    try {
        body();
        return XS_OK;
    } catch (const xorsat::Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return XS_ENUMERIC;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* xs_version(void) { return xorsat::kVersion; }

const char* xs_last_error(void) { return g_last_error.c_str(); }

void xs_string_free(char* s) { std::free(s); }

xs_status xs_gen_gallager(uint64_t m, uint64_t k, uint64_t d, uint64_t seed, xs_instance** out) {
    return guarded([&] {
        xorsat::Rng rng(seed);
        const xorsat::BitMatrix h = xorsat::sample_gallager(m, k, d, rng);
        auto inst = new xs_instance{xorsat::sample_instance(h, rng, "gallager")};
        inst->impl.seed = seed;
        *out = inst;
    });
}

xs_status xs_gen_bernoulli(uint64_t m, uint64_t rows, double p, uint64_t seed, xs_instance** out) {
    return guarded([&] {
        xorsat::Rng rng(seed);
        const xorsat::BitMatrix h = xorsat::sample_bernoulli(m, double(rows) / double(m), p, rng);
        auto inst = new xs_instance{xorsat::sample_instance(h, rng, "bernoulli")};
        inst->impl.seed = seed;
        *out = inst;
    });
}

xs_status xs_gen_right_regular(uint64_t m, uint64_t rows, uint64_t d, uint64_t seed, xs_instance** out) {
    return guarded([&] {
        xorsat::Rng rng(seed);
        const xorsat::BitMatrix h = xorsat::sample_right_regular(m, double(rows) / double(m), d, rng);
        auto inst = new xs_instance{xorsat::sample_instance(h, rng, "right_regular")};
        inst->impl.seed = seed;
        *out = inst;
    });
}

xs_status xs_gen_girth4(uint64_t n, uint64_t k, uint64_t d, uint64_t seed, xs_instance** out) {
    return guarded([&] {
        xorsat::Rng rng(seed);
        const xorsat::BitMatrix b = xorsat::sample_girth4_biregular(n, k, d, rng);
        auto inst = new xs_instance{xorsat::sample_instance(b.transposed(), rng, "girth4_biregular")};
        inst->impl.seed = seed;
        *out = inst;
    });
}

xs_status xs_instance_from_json(const char* text, xs_instance** out) {
    return guarded([&] { *out = new xs_instance{xorsat::instance_from_json(text)}; });
}

xs_status xs_instance_to_json(const xs_instance* inst, char** json_out) {
    return guarded([&] { *json_out = dup_string(xorsat::instance_to_json(inst->impl)); });
}

xs_status xs_instance_dims(const xs_instance* inst, uint64_t* m, uint64_t* n, int* k, int* d) {
    return guarded([&] {
        if (m) *m = inst->impl.m();
        if (n) *n = inst->impl.n();
        if (k) *k = inst->impl.k;
        if (d) *d = inst->impl.d;
    });
}

void xs_instance_free(xs_instance* inst) { delete inst; }

xs_status xs_solve(const xs_instance* inst, int threads, int* g_star, char** z_out) {
    return guarded([&] {
        const auto r = xorsat::brute_force_max(inst->impl, threads);
        if (g_star) *g_star = r.g_star;
        if (z_out) *z_out = dup_string(r.z_star.to_string());
    });
}

xs_status xs_count_above(const xs_instance* inst, double theta, int threads, uint64_t* count) {
    return guarded([&] { *count = xorsat::count_above(inst->impl, theta, threads); });
}

xs_status xs_dqi_run_csv(const xs_instance* inst, uint64_t ell, uint64_t w_max, int threads, char** csv_out) {
    return guarded([&] {
        const auto rec = xorsat::dqi_run(inst->impl, ell, w_max, threads);
        *csv_out = dup_string(xorsat::dqi_records_csv({rec}));
    });
}

xs_status xs_qaoa1_formula(uint64_t k, double lambda, double gamma, double beta, double* value) {
    return guarded([&] { *value = xorsat::qaoa1_formula(k, lambda, gamma, beta); });
}

xs_status xs_qaoa1_optimize(uint64_t k, double lambda, double* gamma, double* beta, double* value) {
    return guarded([&] {
        const auto opt = xorsat::qaoa1_optimize(k, lambda);
        if (gamma) *gamma = opt.gamma;
        if (beta) *beta = opt.beta;
        if (value) *value = opt.value;
    });
}

xs_status xs_qaoa1_reference_angles(uint64_t k, double lambda, double* gamma, double* beta) {
    return guarded([&] {
        const auto par = xorsat::qaoa1_reference_angles(k, lambda);
        if (gamma) *gamma = par.gamma;
        if (beta) *beta = par.beta;
    });
}

xs_status xs_qaoa1_oracle_mean(const xs_instance* inst, double gamma, double beta, uint64_t samples, uint64_t seed,
                               double* mean, double* stddev) {
    return guarded([&] {
        const xorsat::Qaoa1ConeEvaluator cone(inst->impl.B);
        xorsat::Rng rng(seed);
        const auto r = cone.parity_mean(gamma, beta, samples, rng);
        if (mean) *mean = r.mean;
        if (stddev) *stddev = r.stddev;
    });
}

xs_status xs_h2(double x, double* value) {
    return guarded([&] { *value = xorsat::h2(x); });
}
xs_status xs_h2_inv(double y, double* value) {
    return guarded([&] { *value = xorsat::h2_inv(y); });
}
xs_status xs_theta_star(double lambda, double* value) {
    return guarded([&] { *value = xorsat::theta_star(lambda); });
}
xs_status xs_ell_star_fraction(double k, double lambda, double c_star, double* value) {
    return guarded([&] { *value = xorsat::ell_star_fraction(k, lambda, c_star); });
}
xs_status xs_mu_top(double k, double lambda, double c_star, double* value) {
    return guarded([&] { *value = xorsat::mu_top(k, lambda, c_star); });
}
xs_status xs_dqi_expected_bound(double k, double lambda, double c_star, double* value) {
    return guarded([&] { *value = xorsat::dqi_expected_bound(k, lambda, c_star); });
}
xs_status xs_chaos_threshold(uint64_t r, double lambda, double nu2, double* value) {
    return guarded([&] { *value = xorsat::chaos_threshold(r, lambda, nu2); });
}
xs_status xs_ogp2_threshold(double k, double lambda, double nu1, double nu2, double* value) {
    return guarded([&] { *value = xorsat::ogp2_threshold(k, lambda, nu1, nu2); });
}
xs_status xs_varpsi(double mu, double nu1, double nu2, double lambda, double k, double* value) {
    return guarded([&] { *value = xorsat::varpsi(mu, nu1, nu2, lambda, k); });
}
xs_status xs_varpsi_tilde(double mu, double nu2, double lambda, uint64_t r, double* value) {
    return guarded([&] { *value = xorsat::varpsi_tilde(mu, nu2, lambda, r); });
}
xs_status xs_amp_fitted(double k, double lambda, double* value) {
    return guarded([&] { *value = xorsat::amp_fitted(k, lambda); });
}
xs_status xs_semicircle(double ell_over_m, double* value) {
    return guarded([&] { *value = xorsat::semicircle_value(ell_over_m); });
}

xs_status xs_thresholds_csv(const double* ks, size_t count, double lambda, double c_star, double nu1,
                            double chaos_nu2, int with_qaoa_opt, char** csv_out) {
    return guarded([&] {
        xorsat::ThresholdOptions opt;
        opt.lambda = lambda;
        opt.c_star = c_star;
        opt.nu1 = nu1;
        opt.chaos_nu2 = chaos_nu2;
        opt.with_qaoa_opt = with_qaoa_opt != 0;
        *csv_out = dup_string(xorsat::thresholds_csv(std::vector<double>(ks, ks + count), opt));
    });
}

xs_status xs_chaos_scan_json(const xs_instance* inst, uint64_t r, double mu, double nu2, uint64_t trials,
                             uint64_t seed, char** json_out) {
    return guarded([&] {
        xorsat::Rng rng(seed);
        const auto res = xorsat::chaos_probe(inst->impl.B, r, mu, nu2, trials, std::size_t(inst->impl.k), rng);
        *json_out = dup_string(xorsat::probe_json("chaos", res, mu, 0.0, nu2, seed));
    });
}

xs_status xs_ogp_scan_json(double kappa, double mu, double nu1, double nu2, uint64_t trials, uint64_t m, uint64_t k,
                           uint64_t d, uint64_t seed, char** json_out) {
    return guarded([&] {
        xorsat::Rng rng(seed);
        const auto res = xorsat::ogp_probe(kappa, mu, nu1, nu2, trials, {m, k, d}, rng);
        *json_out = dup_string(xorsat::probe_json("ogp", res, mu, nu1, nu2, seed));
    });
}

xs_status xs_interp_scan_csv(const xs_instance* inst, uint64_t t_count, uint64_t q_count, double mu, uint64_t seed,
                             char** csv_out) {
    return guarded([&] {
        xorsat::Rng rng(seed);
        const auto traces =
            xorsat::interpolation_overlap_sweep(inst->impl.B, t_count, q_count, mu, std::size_t(inst->impl.k), rng);
        *csv_out = dup_string(xorsat::interp_traces_csv(traces));
    });
}

xs_status xs_concentration_json(const xs_instance* inst, uint64_t samples, uint64_t seed, int threads,
                                char** json_out) {
    return guarded([&] {
        xorsat::Rng rng(seed);
        const auto r = xorsat::concentration_probe(inst->impl.B, samples, rng, threads);
        std::string json = "{\"probe\":\"concentration\",\"samples\":" + std::to_string(r.samples) +
                           ",\"mean\":" + xorsat::format_double(r.mean) +
                           ",\"stddev\":" + xorsat::format_double(r.stddev) + ",\"seed\":" + std::to_string(seed) +
                           "}";
        *json_out = dup_string(json);
    });
}

xs_status xs_code_report_json(const xs_instance* inst, double epsilon, uint64_t w_max, char** json_out) {
    return guarded([&] {
        const xorsat::BitMatrix h = inst->impl.B.transposed();
        *json_out = dup_string(xorsat::code_report_json(h, epsilon, w_max));
    });
}

xs_status xs_selftest(uint64_t seed, int threads, const char* out_dir, int* failures) {
    return guarded([&] {
        xorsat::SelftestOptions opt;
        opt.seed = seed;
        opt.threads = threads;
        if (out_dir) opt.out_dir = out_dir;
        const auto results = xorsat::run_acceptance(opt, &std::cout);
        int fail_count = 0;
        for (const auto& r : results) fail_count += r.pass ? 0 : 1;
        if (failures) *failures = fail_count;
    });
}

} // extern "C"
