/* C API for the xorsat core: opaque handles, integer status codes, malloc'd
 * strings released through xs_string_free. Every function returns XS_OK on
 * success; on failure xs_last_error() describes the most recent error on the
 * calling thread. */
#ifndef XORSAT_H
#define XORSAT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum xs_status {
    XS_OK = 0,
    XS_EINVAL = 1,            /* precondition violated */
    XS_EDOMAIN = 2,           /* formula argument outside its domain */
    XS_ECOLLISION = 3,        /* syndrome collision: 2*ell+1 exceeds distance */
    XS_EUNKNOWN_SYNDROME = 4, /* syndrome maps to no stored error */
    XS_ECAP = 5,              /* resource cap exceeded */
    XS_EPARSE = 6,            /* malformed input */
    XS_ENUMERIC = 7           /* numerical failure */
} xs_status;

typedef struct xs_instance xs_instance;

const char* xs_version(void);
const char* xs_last_error(void);
void xs_string_free(char* s);

/* --- instances ---------------------------------------------------------- */

xs_status xs_gen_gallager(uint64_t m, uint64_t k, uint64_t d, uint64_t seed, xs_instance** out);
xs_status xs_gen_bernoulli(uint64_t m, uint64_t rows, double p, uint64_t seed, xs_instance** out);
xs_status xs_gen_right_regular(uint64_t m, uint64_t rows, uint64_t d, uint64_t seed, xs_instance** out);
/* girth>4 (k,d)-biregular factor graph on n variables, uniform parities */
xs_status xs_gen_girth4(uint64_t n, uint64_t k, uint64_t d, uint64_t seed, xs_instance** out);

xs_status xs_instance_from_json(const char* text, xs_instance** out);
xs_status xs_instance_to_json(const xs_instance* inst, char** json_out);
xs_status xs_instance_dims(const xs_instance* inst, uint64_t* m, uint64_t* n, int* k, int* d);
void xs_instance_free(xs_instance* inst);

/* --- exhaustive optimization --------------------------------------------- */

/* z_out (optional) receives the lexicographically-smallest maximizer as a
 * '0'/'1' string. */
xs_status xs_solve(const xs_instance* inst, int threads, int* g_star, char** z_out);
xs_status xs_count_above(const xs_instance* inst, double theta, int threads, uint64_t* count);

/* --- DQI ------------------------------------------------------------------ */

/* CSV (with header) holding one record:
 * seed,m,n,k,d,ell,distance,dqi_value,semicircle,gstar,route_dev */
xs_status xs_dqi_run_csv(const xs_instance* inst, uint64_t ell, uint64_t w_max, int threads, char** csv_out);

/* --- QAOA ------------------------------------------------------------------ */

xs_status xs_qaoa1_formula(uint64_t k, double lambda, double gamma, double beta, double* value);
xs_status xs_qaoa1_optimize(uint64_t k, double lambda, double* gamma, double* beta, double* value);
xs_status xs_qaoa1_reference_angles(uint64_t k, double lambda, double* gamma, double* beta);
/* Exact depth-1 expectation averaged over `samples` parity draws on the
 * instance's factor graph. */
xs_status xs_qaoa1_oracle_mean(const xs_instance* inst, double gamma, double beta, uint64_t samples, uint64_t seed,
                               double* mean, double* stddev);

/* --- closed-form thresholds ------------------------------------------------ */

xs_status xs_h2(double x, double* value);
xs_status xs_h2_inv(double y, double* value);
xs_status xs_theta_star(double lambda, double* value);
xs_status xs_ell_star_fraction(double k, double lambda, double c_star, double* value);
xs_status xs_mu_top(double k, double lambda, double c_star, double* value);
xs_status xs_dqi_expected_bound(double k, double lambda, double c_star, double* value);
xs_status xs_chaos_threshold(uint64_t r, double lambda, double nu2, double* value);
xs_status xs_ogp2_threshold(double k, double lambda, double nu1, double nu2, double* value);
xs_status xs_varpsi(double mu, double nu1, double nu2, double lambda, double k, double* value);
xs_status xs_varpsi_tilde(double mu, double nu2, double lambda, uint64_t r, double* value);
xs_status xs_amp_fitted(double k, double lambda, double* value);
xs_status xs_semicircle(double ell_over_m, double* value);

/* k,lambda,c_star,theta_star,ell_star,dqi_bound,mu_top,chaos_mu,ogp2_mu,
 * qaoa1_opt,amp_fit; cells outside a formula's domain print "nan". */
xs_status xs_thresholds_csv(const double* ks, size_t count, double lambda, double c_star, double nu1,
                            double chaos_nu2, int with_qaoa_opt, char** csv_out);

/* --- landscape probes ------------------------------------------------------- */

xs_status xs_chaos_scan_json(const xs_instance* inst, uint64_t r, double mu, double nu2, uint64_t trials,
                             uint64_t seed, char** json_out);
xs_status xs_ogp_scan_json(double kappa, double mu, double nu1, double nu2, uint64_t trials, uint64_t m, uint64_t k,
                           uint64_t d, uint64_t seed, char** json_out);
xs_status xs_interp_scan_csv(const xs_instance* inst, uint64_t t_count, uint64_t q_count, double mu, uint64_t seed,
                             char** csv_out);
xs_status xs_concentration_json(const xs_instance* inst, uint64_t samples, uint64_t seed, int threads,
                                char** json_out);
xs_status xs_code_report_json(const xs_instance* inst, double epsilon, uint64_t w_max, char** json_out);

/* --- acceptance ---------------------------------------------------------------- */

/* Runs the acceptance suite, printing one line per criterion to stdout;
 * *failures receives the number of failed criteria. Artifacts land under
 * out_dir when non-NULL. */
xs_status xs_selftest(uint64_t seed, int threads, const char* out_dir, int* failures);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* XORSAT_H */
