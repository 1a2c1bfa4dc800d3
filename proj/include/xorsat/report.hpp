#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xorsat/dqi.hpp"
#include "xorsat/landscape.hpp"

namespace xorsat {

// Deterministic formatting shared by every emitter: '.' decimal point, "%.12g",
// "nan" for unavailable values. CSV uses '\n' line endings and always carries
// a header row.
std::string format_double(double v);

struct ThresholdOptions {
    double lambda = 2.0;
    double c_star = 1.0;
    double nu1 = 0.1;
    double chaos_nu2 = 0.1; // chaos column uses R = ceil(nu2^-2)
    bool with_qaoa_opt = true;
};

// Header: k,lambda,c_star,theta_star,ell_star,dqi_bound,mu_top,chaos_mu,
// ogp2_mu,qaoa1_opt,amp_fit. Cells outside a formula's domain print "nan".
// The ogp2 column uses the running band choice nu2 = nu1 + 1/ln(k)^2.
std::string thresholds_csv(const std::vector<double>& ks, const ThresholdOptions& opt);

struct DqiRunRecord {
    std::uint64_t seed = 0;
    std::size_t m = 0, n = 0;
    int k = 0, d = 0;
    std::size_t ell = 0;
    std::optional<std::size_t> distance; // nullopt: > w_max, printed as -1
    double dqi_value = 0.0;
    double semicircle = 0.0;
    int gstar = 0;
    double route_dev = 0.0; // max amplitude deviation across construction routes
};

// Runs the DQI stack on one instance with the Rayleigh-optimal polynomial:
// direct and syndrome constructions always, the pipeline trace when the
// verified distance admits the table. w_max caps the distance search.
DqiRunRecord dqi_run(const XorSatInstance& inst, std::size_t ell, std::size_t w_max, int threads = 1);

std::string dqi_records_csv(const std::vector<DqiRunRecord>& records);

// {"lo":..,"hi":..} Wilson score interval at z (e.g. 1.96).
std::pair<double, double> wilson_interval(std::size_t successes, std::size_t trials, double z);

std::string probe_json(const std::string& kind, const ProbeResult& r, double mu, double nu1, double nu2,
                       std::uint64_t seed);

std::string interp_traces_csv(const std::vector<InterpTrace>& traces);

std::string code_report_json(const BitMatrix& h, double epsilon, std::size_t w_max);

// Config echo + seed + version; no timestamps, so identical configs produce
// byte-identical manifests.
std::string manifest_json(const std::string& command, const std::vector<std::pair<std::string, std::string>>& config,
                          std::uint64_t seed);

} // namespace xorsat
