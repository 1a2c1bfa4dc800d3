#include "xorsat/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "xorsat/qaoa.hpp"
#include "xorsat/thresholds.hpp"

namespace xorsat {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    // to_chars: locale-independent, so the '.' decimal point holds even when
    // a host application changes the global locale.
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

namespace {

template <typename F>
double guarded(F&& f) {
    try {
        return f();
    } catch (const Error&) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

} // namespace

std::string thresholds_csv(const std::vector<double>& ks, const ThresholdOptions& opt) {
    std::ostringstream out;
    out << "k,lambda,c_star,theta_star,ell_star,dqi_bound,mu_top,chaos_mu,ogp2_mu,qaoa1_opt,amp_fit\n";
    const std::size_t chaos_r = std::size_t(std::ceil(1.0 / (opt.chaos_nu2 * opt.chaos_nu2)));
    for (double k : ks) {
        const double ogp_nu2 = opt.nu1 + 1.0 / (std::log(k) * std::log(k));
        out << format_double(k) << ',' << format_double(opt.lambda) << ',' << format_double(opt.c_star) << ','
            << format_double(guarded([&] { return theta_star(opt.lambda); })) << ','
            << format_double(guarded([&] { return ell_star_fraction(k, opt.lambda, opt.c_star); })) << ','
            << format_double(guarded([&] { return dqi_expected_bound(k, opt.lambda, opt.c_star); })) << ','
            << format_double(guarded([&] { return mu_top(k, opt.lambda, opt.c_star); })) << ','
            << format_double(guarded([&] { return chaos_threshold(chaos_r, opt.lambda, opt.chaos_nu2); })) << ','
            << format_double(guarded([&] { return ogp2_threshold(k, opt.lambda, opt.nu1, ogp_nu2); })) << ','
            << format_double(guarded([&] {
                   if (!opt.with_qaoa_opt) return std::numeric_limits<double>::quiet_NaN();
                   return qaoa1_optimize(std::size_t(k), opt.lambda).value;
               }))
            << ',' << format_double(guarded([&] { return amp_fitted(k, opt.lambda); })) << '\n';
    }
    return out.str();
}

DqiRunRecord dqi_run(const XorSatInstance& inst, std::size_t ell, std::size_t w_max, int threads) {
    DqiRunRecord rec;
    rec.seed = inst.seed;
    rec.m = inst.m();
    rec.n = inst.n();
    rec.k = inst.k;
    rec.d = inst.d;
    rec.ell = ell;

    const BitMatrix h = inst.B.transposed();
    rec.distance = code_distance_exact(h, std::min(w_max, inst.m()));

    const DqiOptimum opt = dqi_optimal_coefficients(inst, ell);
    const DqiState direct = dqi_state_direct(inst, opt.poly);
    const DqiState synd = dqi_state_syndrome(inst, opt.poly);
    rec.route_dev = state_distance(direct, synd);
    if (rec.distance && 2 * ell + 1 <= *rec.distance && inst.m() + inst.n() <= 26) {
        const DecodeTable table = build_decode_table(h, ell);
        const DqiState trace = dqi_pipeline_trace(inst, opt.poly, table);
        rec.route_dev = std::max(rec.route_dev, state_distance(direct, trace));
    }
    rec.dqi_value = dqi_expected_fraction(direct, inst);
    rec.semicircle = semicircle_value(double(ell) / double(inst.m()));
    rec.gstar = brute_force_max(inst, threads).g_star;
    return rec;
}

std::string dqi_records_csv(const std::vector<DqiRunRecord>& records) {
    std::ostringstream out;
    out << "seed,m,n,k,d,ell,distance,dqi_value,semicircle,gstar,route_dev\n";
    for (const auto& r : records) {
        out << r.seed << ',' << r.m << ',' << r.n << ',' << r.k << ',' << r.d << ',' << r.ell << ','
            << (r.distance ? std::to_string(*r.distance) : std::string("-1")) << ',' << format_double(r.dqi_value)
            << ',' << format_double(r.semicircle) << ',' << r.gstar << ',' << format_double(r.route_dev) << '\n';
    }
    return out.str();
}

std::pair<double, double> wilson_interval(std::size_t successes, std::size_t trials, double z) {
    if (trials == 0) return {0.0, 1.0};
    const double nhat = double(trials);
    const double p = double(successes) / nhat;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nhat;
    const double center = (p + z2 / (2.0 * nhat)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / nhat + z2 / (4.0 * nhat * nhat)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

std::string probe_json(const std::string& kind, const ProbeResult& r, double mu, double nu1, double nu2,
                       std::uint64_t seed) {
    const auto [lo, hi] = wilson_interval(r.yes, r.trials, 1.96);
    nlohmann::ordered_json j;
    j["probe"] = kind;
    j["mu"] = mu;
    j["nu1"] = nu1;
    j["nu2"] = nu2;
    j["trials"] = r.trials;
    j["yes"] = r.yes;
    j["no"] = r.no;
    j["unknown"] = r.unknown;
    j["frequency"] = r.frequency();
    j["wilson95_lo"] = lo;
    j["wilson95_hi"] = hi;
    j["seed"] = seed;
    return j.dump();
}

std::string interp_traces_csv(const std::vector<InterpTrace>& traces) {
    std::ostringstream out;
    out << "q,t1,t2,min_dk_over_n\n";
    for (const auto& t : traces)
        out << t.q << ',' << t.t1 << ',' << t.t2 << ','
            << (t.min_overlap ? format_double(*t.min_overlap) : std::string("nan")) << '\n';
    return out.str();
}

std::string code_report_json(const BitMatrix& h, double epsilon, std::size_t w_max) {
    const auto [wt_b, wt_c] = sparsities(h);
    const auto full = code_distance_exact(h, w_max);
    const CodeReport restricted = restrictability_probe(h, epsilon, w_max);
    nlohmann::ordered_json j;
    j["checks"] = h.rows();
    j["bits"] = h.cols();
    j["wt_b"] = wt_b;
    j["wt_c"] = wt_c;
    j["w_max"] = w_max;
    j["distance"] = full ? nlohmann::ordered_json(*full) : nlohmann::ordered_json(nullptr);
    j["epsilon"] = epsilon;
    j["rows_used"] = restricted.rows_used;
    j["restricted_distance"] =
        restricted.restricted_distance ? nlohmann::ordered_json(*restricted.restricted_distance)
                                       : nlohmann::ordered_json(nullptr);
    return j.dump();
}

std::string manifest_json(const std::string& command, const std::vector<std::pair<std::string, std::string>>& config,
                          std::uint64_t seed) {
    nlohmann::ordered_json j;
    j["tool"] = "xorsat";
    j["version"] = kVersion;
    j["command"] = command;
    auto cfg = nlohmann::ordered_json::object();
    for (const auto& [key, val] : config) cfg[key] = val;
    j["config"] = std::move(cfg);
    j["seed"] = seed;
    return j.dump(2) + "\n";
}

} // namespace xorsat
