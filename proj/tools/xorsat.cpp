// Command-line front end. Talks to the core exclusively through the C API in
// xorsat.h; all randomness flows from --seed, so identical invocations write
// byte-identical artifacts.
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "xorsat.h"

namespace {

struct Common {
    std::uint64_t seed = 1;
    int threads = 0; // 0: logical cores
    std::string out;
};

int effective_threads(const Common& c) {
    if (c.threads > 0) return c.threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--seed", c.seed, "master seed (default 1)");
    cmd->add_option("--threads", c.threads, "worker threads (default: logical cores)");
    cmd->add_option("--out", c.out, "write output to this path (plus <path>.manifest.json)");
}

std::string read_file_or_die(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(2);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

[[noreturn]] void die(const char* where) {
    std::cerr << "error: " << where << ": " << xs_last_error() << "\n";
    std::exit(1);
}

void check(xs_status st, const char* where) {
    if (st != XS_OK) die(where);
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    xs_string_free(s);
    return out;
}

// Config echo + seed + version; field order fixed, no timestamps.
std::string manifest(const std::string& command, const std::vector<std::pair<std::string, std::string>>& config,
                     std::uint64_t seed) {
    std::ostringstream ss;
    ss << "{\n  \"tool\": \"xorsat\",\n  \"version\": \"" << xs_version() << "\",\n  \"command\": \"" << command
       << "\",\n  \"config\": {";
    bool first = true;
    for (const auto& [key, val] : config) {
        ss << (first ? "\n" : ",\n") << "    \"" << key << "\": \"" << val << "\"";
        first = false;
    }
    ss << "\n  },\n  \"seed\": " << seed << "\n}\n";
    return ss.str();
}

void emit(const Common& c, const std::string& command, const std::string& payload,
          const std::vector<std::pair<std::string, std::string>>& config) {
    if (c.out.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(c.out, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << c.out << "\n";
        std::exit(2);
    }
    out << payload;
    if (!payload.empty() && payload.back() != '\n') out << "\n";
    std::ofstream man(c.out + ".manifest.json", std::ios::binary);
    man << manifest(command, config, c.seed);
}

xs_instance* load_instance(const std::string& path) {
    xs_instance* inst = nullptr;
    check(xs_instance_from_json(read_file_or_die(path).c_str(), &inst), "load instance");
    return inst;
}

// "4:64:*2" (geometric), "4:20:+4" (arithmetic), or "4,8,12".
std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> out;
    if (text.find(',') != std::string::npos || text.find(':') == std::string::npos) {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
        return out;
    }
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 + 1);
    const double start = std::stod(text.substr(0, c1));
    const double end = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    std::string step = c2 == std::string::npos ? "*2" : text.substr(c2 + 1);
    if (step.empty()) step = "*2";
    for (double k = start; k <= end + 1e-9;) {
        out.push_back(k);
        if (step[0] == '*')
            k *= std::stod(step.substr(1));
        else if (step[0] == '+')
            k += std::stod(step.substr(1));
        else
            k += std::stod(step);
    }
    return out;
}

std::string u64s(std::uint64_t v) { return std::to_string(v); }
std::string ds(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"MAX-k-XOR-SAT over LDPC-transpose ensembles: generators, exact DQI/QAOA simulation, "
                 "closed-form thresholds, and landscape probes"};
    app.require_subcommand(1);

    // gen ----------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "sample an instance and emit its JSON");
    Common gen_c;
    std::string gen_ensemble = "gallager";
    std::uint64_t gen_m = 24, gen_k = 3, gen_d = 6, gen_rows = 0, gen_n = 0;
    double gen_p = 0.5;
    gen->add_option("--ensemble", gen_ensemble, "gallager|bernoulli|right_regular|girth4");
    gen->add_option("--m", gen_m, "clause count (code length)");
    gen->add_option("--k", gen_k, "clause arity");
    gen->add_option("--d", gen_d, "variable degree");
    gen->add_option("--rows", gen_rows, "check count for bernoulli/right_regular (default m/2)");
    gen->add_option("--n", gen_n, "variable count for girth4 (default from m,k,d)");
    gen->add_option("--p", gen_p, "entry probability for bernoulli");
    add_common(gen, gen_c);
    gen->callback([&] {
        xs_instance* inst = nullptr;
        const std::uint64_t rows = gen_rows ? gen_rows : gen_m / 2;
        if (gen_ensemble == "gallager")
            check(xs_gen_gallager(gen_m, gen_k, gen_d, gen_c.seed, &inst), "gen");
        else if (gen_ensemble == "bernoulli")
            check(xs_gen_bernoulli(gen_m, rows, gen_p, gen_c.seed, &inst), "gen");
        else if (gen_ensemble == "right_regular")
            check(xs_gen_right_regular(gen_m, rows, gen_d, gen_c.seed, &inst), "gen");
        else if (gen_ensemble == "girth4")
            check(xs_gen_girth4(gen_n ? gen_n : gen_m * gen_k / gen_d, gen_k, gen_d, gen_c.seed, &inst), "gen");
        else {
            std::cerr << "error: unknown ensemble " << gen_ensemble << "\n";
            std::exit(2);
        }
        char* json = nullptr;
        check(xs_instance_to_json(inst, &json), "serialize");
        emit(gen_c, "gen", take_string(json),
             {{"ensemble", gen_ensemble},
              {"m", u64s(gen_m)},
              {"k", u64s(gen_k)},
              {"d", u64s(gen_d)},
              {"rows", u64s(rows)},
              {"p", ds(gen_p)}});
        xs_instance_free(inst);
    });

    // solve ----------------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "exhaustive maximum of g over all assignments");
    Common solve_c;
    std::string solve_path;
    std::string solve_format = "json";
    solve->add_option("--instance", solve_path, "instance JSON path")->required();
    solve->add_option("--format", solve_format, "json|csv");
    add_common(solve, solve_c);
    solve->callback([&] {
        xs_instance* inst = load_instance(solve_path);
        int g_star = 0;
        char* z = nullptr;
        check(xs_solve(inst, effective_threads(solve_c), &g_star, &z), "solve");
        std::uint64_t m = 0, n = 0;
        int k = 0, d = 0;
        xs_instance_dims(inst, &m, &n, &k, &d);
        const std::string zs = take_string(z);
        std::ostringstream payload;
        if (solve_format == "csv")
            payload << "m,n,g_star,z\n" << m << ',' << n << ',' << g_star << ',' << zs << "\n";
        else
            payload << "{\"m\":" << m << ",\"n\":" << n << ",\"g_star\":" << g_star << ",\"z\":\"" << zs << "\"}\n";
        emit(solve_c, "solve", payload.str(), {{"instance", solve_path}, {"format", solve_format}});
        xs_instance_free(inst);
    });

    // dqi ----------------------------------------------------------------
    auto* dqi = app.add_subcommand("dqi", "DQI record: route deviation, expected fraction, semicircle, g*");
    Common dqi_c;
    std::string dqi_path;
    std::uint64_t dqi_ell = 2, dqi_wmax = 12;
    dqi->add_option("--instance", dqi_path, "instance JSON path")->required();
    dqi->add_option("--ell", dqi_ell, "polynomial degree / decodable weight");
    dqi->add_option("--w-max", dqi_wmax, "distance verification cap");
    add_common(dqi, dqi_c);
    dqi->callback([&] {
        xs_instance* inst = load_instance(dqi_path);
        char* csv = nullptr;
        check(xs_dqi_run_csv(inst, dqi_ell, dqi_wmax, effective_threads(dqi_c), &csv), "dqi");
        emit(dqi_c, "dqi", take_string(csv),
             {{"instance", dqi_path}, {"ell", u64s(dqi_ell)}, {"w_max", u64s(dqi_wmax)}});
        xs_instance_free(inst);
    });

    // qaoa ----------------------------------------------------------------
    auto* qaoa = app.add_subcommand("qaoa", "depth-1 closed form, optimized angles, optional exact oracle");
    Common qaoa_c;
    std::uint64_t qaoa_k = 4;
    double qaoa_lambda = 2.0, qaoa_gamma = -1.0, qaoa_beta = -1.0;
    std::string qaoa_oracle_path;
    std::uint64_t qaoa_samples = 1000;
    qaoa->add_option("--k", qaoa_k, "clause arity");
    qaoa->add_option("--lambda", qaoa_lambda, "clause density");
    qaoa->add_option("--gamma", qaoa_gamma, "phase angle (default: reference choice)");
    qaoa->add_option("--beta", qaoa_beta, "mixer angle (default: reference choice)");
    qaoa->add_option("--oracle-instance", qaoa_oracle_path, "instance JSON for the exact statevector oracle");
    qaoa->add_option("--samples", qaoa_samples, "parity draws for the oracle mean");
    add_common(qaoa, qaoa_c);
    qaoa->callback([&] {
        double ref_gamma = 0, ref_beta = 0;
        check(xs_qaoa1_reference_angles(qaoa_k, qaoa_lambda, &ref_gamma, &ref_beta), "angles");
        const double gamma = qaoa_gamma < 0 ? ref_gamma : qaoa_gamma;
        const double beta = qaoa_beta < 0 ? ref_beta : qaoa_beta;
        double value = 0.0;
        check(xs_qaoa1_formula(qaoa_k, qaoa_lambda, gamma, beta, &value), "formula");
        double og = 0, ob = 0, ov = 0;
        check(xs_qaoa1_optimize(qaoa_k, qaoa_lambda, &og, &ob, &ov), "optimize");
        std::ostringstream payload;
        payload << "{\"k\":" << qaoa_k << ",\"lambda\":" << ds(qaoa_lambda) << ",\"gamma\":" << ds(gamma)
                << ",\"beta\":" << ds(beta) << ",\"formula\":" << ds(value) << ",\"opt_gamma\":" << ds(og)
                << ",\"opt_beta\":" << ds(ob) << ",\"opt_value\":" << ds(ov);
        if (!qaoa_oracle_path.empty()) {
            xs_instance* inst = load_instance(qaoa_oracle_path);
            double mean = 0, sd = 0;
            check(xs_qaoa1_oracle_mean(inst, gamma, beta, qaoa_samples, qaoa_c.seed, &mean, &sd), "oracle");
            payload << ",\"oracle_mean\":" << ds(mean) << ",\"oracle_stddev\":" << ds(sd)
                    << ",\"oracle_samples\":" << qaoa_samples;
            xs_instance_free(inst);
        }
        payload << "}\n";
        emit(qaoa_c, "qaoa", payload.str(),
             {{"k", u64s(qaoa_k)},
              {"lambda", ds(qaoa_lambda)},
              {"gamma", ds(gamma)},
              {"beta", ds(beta)},
              {"oracle_instance", qaoa_oracle_path},
              {"samples", u64s(qaoa_samples)}});
    });

    // thresholds ------------------------------------------------------------
    auto* thr = app.add_subcommand("thresholds", "closed-form threshold table as CSV");
    Common thr_c;
    std::string thr_grid = "4:64:*2";
    double thr_lambda = 2.0, thr_cstar = 1.0, thr_nu1 = 0.1, thr_nu2 = 0.1;
    bool thr_no_qaoa = false;
    thr->add_option("--k", thr_grid, "k grid: start:end:*factor, start:end:+step, or comma list");
    thr->add_option("--lambda", thr_lambda, "clause density");
    thr->add_option("--c-star", thr_cstar, "decoding constant c*");
    thr->add_option("--nu1", thr_nu1, "OGP band floor");
    thr->add_option("--nu2", thr_nu2, "chaos overlap radius (R = ceil(nu2^-2))");
    thr->add_flag("--no-qaoa-opt", thr_no_qaoa, "skip the qaoa1_opt column (faster)");
    add_common(thr, thr_c);
    thr->callback([&] {
        const std::vector<double> ks = parse_grid(thr_grid);
        char* csv = nullptr;
        check(xs_thresholds_csv(ks.data(), ks.size(), thr_lambda, thr_cstar, thr_nu1, thr_nu2, thr_no_qaoa ? 0 : 1,
                                &csv),
              "thresholds");
        emit(thr_c, "thresholds", take_string(csv),
             {{"k", thr_grid},
              {"lambda", ds(thr_lambda)},
              {"c_star", ds(thr_cstar)},
              {"nu1", ds(thr_nu1)},
              {"nu2", ds(thr_nu2)}});
    });

    // ogp-scan ------------------------------------------------------------
    auto* ogp = app.add_subcommand("ogp-scan", "empirical 2-OGP band probe over correlated pairs");
    Common ogp_c;
    std::uint64_t ogp_m = 24, ogp_k = 3, ogp_d = 6, ogp_trials = 200;
    double ogp_kappa = 0.5, ogp_mu = 0.7, ogp_nu1 = 0.0, ogp_nu2 = 0.25;
    ogp->add_option("--m", ogp_m, "clause count");
    ogp->add_option("--k", ogp_k, "clause arity");
    ogp->add_option("--d", ogp_d, "variable degree");
    ogp->add_option("--kappa", ogp_kappa, "correlation fraction");
    ogp->add_option("--mu", ogp_mu, "SAT-fraction threshold");
    ogp->add_option("--nu1", ogp_nu1, "band floor");
    ogp->add_option("--nu2", ogp_nu2, "band ceiling");
    ogp->add_option("--trials", ogp_trials, "independent trials");
    add_common(ogp, ogp_c);
    ogp->callback([&] {
        char* json = nullptr;
        check(xs_ogp_scan_json(ogp_kappa, ogp_mu, ogp_nu1, ogp_nu2, ogp_trials, ogp_m, ogp_k, ogp_d, ogp_c.seed,
                               &json),
              "ogp-scan");
        emit(ogp_c, "ogp-scan", take_string(json),
             {{"m", u64s(ogp_m)},
              {"k", u64s(ogp_k)},
              {"d", u64s(ogp_d)},
              {"kappa", ds(ogp_kappa)},
              {"mu", ds(ogp_mu)},
              {"nu1", ds(ogp_nu1)},
              {"nu2", ds(ogp_nu2)},
              {"trials", u64s(ogp_trials)}});
    });

    // chaos-scan ------------------------------------------------------------
    auto* chaos = app.add_subcommand("chaos-scan", "chaos-property probe over independent parities");
    Common chaos_c;
    std::string chaos_path;
    std::uint64_t chaos_r = 2, chaos_trials = 200;
    double chaos_mu = 0.7, chaos_nu2 = 0.25;
    chaos->add_option("--instance", chaos_path, "instance JSON path (fixes B)")->required();
    chaos->add_option("--r", chaos_r, "replica count");
    chaos->add_option("--mu", chaos_mu, "SAT-fraction threshold");
    chaos->add_option("--nu2", chaos_nu2, "overlap radius");
    chaos->add_option("--trials", chaos_trials, "independent trials");
    add_common(chaos, chaos_c);
    chaos->callback([&] {
        xs_instance* inst = load_instance(chaos_path);
        char* json = nullptr;
        check(xs_chaos_scan_json(inst, chaos_r, chaos_mu, chaos_nu2, chaos_trials, chaos_c.seed, &json),
              "chaos-scan");
        emit(chaos_c, "chaos-scan", take_string(json),
             {{"instance", chaos_path},
              {"r", u64s(chaos_r)},
              {"mu", ds(chaos_mu)},
              {"nu2", ds(chaos_nu2)},
              {"trials", u64s(chaos_trials)}});
        xs_instance_free(inst);
    });

    // interp-scan ------------------------------------------------------------
    auto* interp = app.add_subcommand("interp-scan", "overlap traces along an interpolation path");
    Common interp_c;
    std::string interp_path;
    std::uint64_t interp_t = 2, interp_q = 4;
    double interp_mu = 0.7;
    interp->add_option("--instance", interp_path, "instance JSON path (fixes B)")->required();
    interp->add_option("--t", interp_t, "replica count");
    interp->add_option("--q", interp_q, "path steps");
    interp->add_option("--mu", interp_mu, "SAT-fraction threshold");
    add_common(interp, interp_c);
    interp->callback([&] {
        xs_instance* inst = load_instance(interp_path);
        char* csv = nullptr;
        check(xs_interp_scan_csv(inst, interp_t, interp_q, interp_mu, interp_c.seed, &csv), "interp-scan");
        emit(interp_c, "interp-scan", take_string(csv),
             {{"instance", interp_path}, {"t", u64s(interp_t)}, {"q", u64s(interp_q)}, {"mu", ds(interp_mu)}});
        xs_instance_free(inst);
    });

    // code-report ------------------------------------------------------------
    auto* report = app.add_subcommand("code-report", "distance and restrictability of the instance's code");
    Common report_c;
    std::string report_path;
    double report_eps = 1.0 / 3.0;
    std::uint64_t report_wmax = 6;
    report->add_option("--instance", report_path, "instance JSON path")->required();
    report->add_option("--epsilon", report_eps, "retained check fraction");
    report->add_option("--w-max", report_wmax, "distance search cap");
    add_common(report, report_c);
    report->callback([&] {
        xs_instance* inst = load_instance(report_path);
        char* json = nullptr;
        check(xs_code_report_json(inst, report_eps, report_wmax, &json), "code-report");
        emit(report_c, "code-report", take_string(json),
             {{"instance", report_path}, {"epsilon", ds(report_eps)}, {"w_max", u64s(report_wmax)}});
        xs_instance_free(inst);
    });

    // selftest ------------------------------------------------------------
    auto* self = app.add_subcommand("selftest", "run the full acceptance suite");
    Common self_c;
    std::string self_dir = "selftest_artifacts";
    self->add_option("--out-dir", self_dir, "artifact directory");
    add_common(self, self_c);
    self->callback([&] {
        int failures = 0;
        check(xs_selftest(self_c.seed, effective_threads(self_c), self_dir.c_str(), &failures), "selftest");
        std::printf("selftest: %d criteria failed\n", failures);
        std::exit(failures == 0 ? 0 : 1);
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}
