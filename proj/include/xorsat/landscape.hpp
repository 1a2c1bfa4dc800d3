#pragma once

#include <optional>
#include <vector>

#include "xorsat/objective.hpp"

namespace xorsat {

// Histogram of d_k(z, z')/n over solution pairs. Bin width is 1/(2n), so
// every attainable value lands in its own bin (index 2*d_k); bins cover
// [0, 1/2].
struct OverlapHistogram {
    std::size_t n = 0;
    std::size_t k = 0;
    double mu = 0.0;
    std::size_t trials = 1;
    std::vector<std::uint64_t> counts; // n+1 bins
    std::uint64_t pairs = 0;

    double bin_low(std::size_t i) const { return double(i) / (2.0 * double(n)); }

    // Associative merge for histograms accumulated across trials.
    void merge(const OverlapHistogram& o);
};

OverlapHistogram overlap_histogram(const SolutionSet& s1, const SolutionSet& s2, std::size_t k, double mu = 0.0);

// Tri-state probe outcome: trials where the sought tuple exists, where it
// provably does not, and where the search budget ran out.
struct ProbeResult {
    std::size_t trials = 0;
    std::size_t yes = 0;
    std::size_t no = 0;
    std::size_t unknown = 0;

    double frequency() const { return trials ? double(yes) / double(trials) : 0.0; }
};

// Does an R-tuple (one member per set) with all pairwise d_k <= limit exist?
// Exact DFS with a node budget; nullopt when the budget is exhausted.
std::optional<bool> tuple_exists(const std::vector<SolutionSet>& sets, std::size_t k, std::size_t dk_limit,
                                 std::size_t node_budget = 1'000'000);

// Fraction of trials (R fresh independent parities on the fixed B) for which
// an R-tuple of mu-good, pairwise d_k <= nu2*n solutions exists.
ProbeResult chaos_probe(const BitMatrix& b, std::size_t r_count, double mu, double nu2, std::size_t trials,
                        std::size_t k, Rng& rng);

// Gallager sampling parameters for probes that draw fresh instances.
struct GallagerParams {
    std::size_t m = 0;
    std::size_t k = 0;
    std::size_t d = 0;
};

// Fraction of trials (fresh kappa-correlated pair per trial) where two
// mu-good solutions with d_k/n in [nu1, nu2] exist.
ProbeResult ogp_probe(double kappa, double mu, double nu1, double nu2, std::size_t trials,
                      const GallagerParams& params, Rng& rng);

// Per-step overlap traces along an interpolation path: for each q and each
// replica pair, the minimum d_k/n over mu-good solution pairs (nullopt when
// either side has no solution).
struct InterpTrace {
    std::size_t q = 0;
    std::size_t t1 = 0;
    std::size_t t2 = 0;
    std::optional<double> min_overlap;
};
std::vector<InterpTrace> interpolation_overlap_sweep(const BitMatrix& b, std::size_t t_count, std::size_t q_count,
                                                     double mu, std::size_t k, Rng& rng);

// Sample mean and standard deviation of g*/m across fresh parity draws.
struct ConcentrationResult {
    double mean = 0.0;
    double stddev = 0.0;
    std::size_t samples = 0;
};
ConcentrationResult concentration_probe(const BitMatrix& b, std::size_t samples, Rng& rng, int threads = 1);

} // namespace xorsat
