// Exercises the shared-library surface end to end: handles, error codes,
// string ownership, and value agreement with known cases.
#include <cassert>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "xorsat.h"

#define CHECK(cond)                                                          \
    do {                                                                     \
        if (!(cond)) {                                                       \
            std::fprintf(stderr, "FAILED %s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                                        \
        }                                                                    \
    } while (0)

int main() {
    CHECK(std::strlen(xs_version()) > 0);

    // generation + dims + JSON round trip
    xs_instance* inst = nullptr;
    CHECK(xs_gen_gallager(24, 3, 6, 7, &inst) == XS_OK);
    uint64_t m = 0, n = 0;
    int k = 0, d = 0;
    CHECK(xs_instance_dims(inst, &m, &n, &k, &d) == XS_OK);
    CHECK(m == 24 && n == 12 && k == 3 && d == 6);

    char* json = nullptr;
    CHECK(xs_instance_to_json(inst, &json) == XS_OK);
    xs_instance* copy = nullptr;
    CHECK(xs_instance_from_json(json, &copy) == XS_OK);
    char* json2 = nullptr;
    CHECK(xs_instance_to_json(copy, &json2) == XS_OK);
    CHECK(std::string(json) == json2);
    xs_string_free(json2);
    xs_string_free(json);
    xs_instance_free(copy);

    // error paths: code + message
    xs_instance* bad = nullptr;
    CHECK(xs_gen_gallager(6, 3, 5, 1, &bad) == XS_EINVAL);
    CHECK(std::strlen(xs_last_error()) > 0);
    CHECK(xs_instance_from_json("{oops", &bad) == XS_EPARSE);

    // deterministic regeneration
    xs_instance* again = nullptr;
    CHECK(xs_gen_gallager(24, 3, 6, 7, &again) == XS_OK);
    char *ja = nullptr, *jb = nullptr;
    xs_instance_to_json(inst, &ja);
    xs_instance_to_json(again, &jb);
    CHECK(std::string(ja) == jb);
    xs_string_free(ja);
    xs_string_free(jb);
    xs_instance_free(again);

    // solve + count
    int g_star = 0;
    char* z = nullptr;
    CHECK(xs_solve(inst, 2, &g_star, &z) == XS_OK);
    CHECK(g_star > 12 && g_star <= 24);
    CHECK(std::strlen(z) == 12);
    xs_string_free(z);
    uint64_t count = 0;
    CHECK(xs_count_above(inst, 0.0, 1, &count) == XS_OK);
    CHECK(count == (uint64_t(1) << 12));

    // dqi record
    char* csv = nullptr;
    CHECK(xs_dqi_run_csv(inst, 2, 12, 2, &csv) == XS_OK);
    CHECK(std::string(csv).rfind("seed,m,n,k,d,ell,distance,dqi_value,semicircle,gstar,route_dev\n", 0) == 0);
    xs_string_free(csv);

    // scalar formulas
    double v = 0.0;
    CHECK(xs_theta_star(2.0, &v) == XS_OK);
    CHECK(std::fabs(v - 0.8900) < 1e-3);
    CHECK(xs_theta_star(0.9, &v) == XS_EDOMAIN);
    CHECK(xs_h2_inv(0.5, &v) == XS_OK);
    CHECK(std::fabs(v - 0.1100) < 1e-3);
    CHECK(xs_semicircle(0.5, &v) == XS_OK);
    CHECK(std::fabs(v - 1.0) < 1e-12);
    CHECK(xs_mu_top(4.0, 2.0, 1.0, &v) == XS_EDOMAIN);
    CHECK(xs_qaoa1_formula(4, 2.0, 0.0, 0.3, &v) == XS_OK);
    CHECK(v == 0.5);

    // thresholds CSV
    const double ks[] = {8.0, 16.0};
    CHECK(xs_thresholds_csv(ks, 2, 2.0, 1.0, 0.1, 0.1, 0, &csv) == XS_OK);
    CHECK(std::string(csv).find("\n8,2,1,") != std::string::npos);
    xs_string_free(csv);

    // probes
    char* probe = nullptr;
    CHECK(xs_chaos_scan_json(inst, 2, 0.7, 0.25, 20, 3, &probe) == XS_OK);
    CHECK(std::string(probe).find("\"probe\":\"chaos\"") != std::string::npos);
    xs_string_free(probe);
    CHECK(xs_ogp_scan_json(0.5, 0.7, 0.0, 0.3, 10, 24, 3, 6, 3, &probe) == XS_OK);
    CHECK(std::string(probe).find("\"frequency\":") != std::string::npos);
    xs_string_free(probe);
    CHECK(xs_interp_scan_csv(inst, 2, 3, 0.7, 3, &probe) == XS_OK);
    CHECK(std::string(probe).rfind("q,t1,t2,min_dk_over_n\n", 0) == 0);
    xs_string_free(probe);
    CHECK(xs_concentration_json(inst, 10, 3, 1, &probe) == XS_OK);
    CHECK(std::string(probe).find("\"mean\":") != std::string::npos);
    xs_string_free(probe);
    CHECK(xs_code_report_json(inst, 1.0 / 3.0, 6, &probe) == XS_OK);
    CHECK(std::string(probe).find("\"restricted_distance\":") != std::string::npos);
    xs_string_free(probe);

    // qaoa oracle on a girth>4 instance
    xs_instance* g4 = nullptr;
    CHECK(xs_gen_girth4(12, 3, 4, 5, &g4) == XS_OK);
    double gamma = 0, beta = 0, mean = 0, sd = 0;
    CHECK(xs_qaoa1_reference_angles(4, 2.0, &gamma, &beta) == XS_OK);
    CHECK(xs_qaoa1_oracle_mean(g4, 0.3, 0.2, 50, 1, &mean, &sd) == XS_OK);
    CHECK(mean > 0.4 && mean < 1.0);
    xs_instance_free(g4);

    xs_instance_free(inst);
    std::puts("capi ok");
    return 0;
}
