#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xorsat/bitmatrix.hpp"
#include "xorsat/rng.hpp"

namespace xorsat {

// One MAX-k-XOR-SAT problem: m clauses over n variables, clause i satisfied
// when row_i(B) . z = v_i. lambda = m/n is kept as the exact (m, n) pair.
struct XorSatInstance {
    BitMatrix B;            // m x n constraint matrix, k-row sparse
    BitVec v;               // m parities
    int k = 0;              // row sparsity
    int d = 0;              // column sparsity; 0 when not column-regular
    std::uint64_t seed = 0; // rng seed the instance was drawn with
    std::string ensemble;   // "gallager" | "bernoulli" | "right_regular" | other

    std::size_t m() const { return B.rows(); }
    std::size_t n() const { return B.cols(); }
    std::pair<std::size_t, std::size_t> lambda() const { return {m(), n()}; }
};

// R instances sharing B whose parities were redrawn on the first
// floor(kappa*m) coordinates and agree exactly on the rest.
struct CorrelatedFamily {
    BitMatrix B;
    double kappa = 0.0;
    std::vector<BitVec> parities; // R entries, parities[0] is the base draw
};

// T replicas of a Q-step parity path: grid[t][q] moves from a shared v at
// q = 0 to mutually independent parities at q = Q, each step redrawing one
// block of <= ceil(m/Q) coordinates.
struct InterpolationPath {
    BitMatrix B;
    std::size_t T = 0;
    std::size_t Q = 0;
    std::vector<std::vector<BitVec>> grid; // T x (Q+1)
};

struct CodeReport {
    std::size_t rows_used = 0;
    std::size_t w_max = 0;
    std::optional<std::size_t> restricted_distance; // nullopt: distance > w_max
};

// Parity check matrix of the Gallager ensemble: merge k independent uniform
// (1,d)-regular layers on m bits. Returns H with n = m*k/d rows, every column
// of weight exactly k and every row of weight exactly d. Requires d | m and
// k >= 3.
BitMatrix sample_gallager(std::size_t m, std::size_t k, std::size_t d, Rng& rng);

// (inv_lambda*m) x m matrix of i.i.d. Bernoulli(p) entries.
BitMatrix sample_bernoulli(std::size_t m, double inv_lambda, double p, Rng& rng);

// (inv_lambda*m) x m matrix whose rows have weight exactly d with uniform
// supports.
BitMatrix sample_right_regular(std::size_t m, double inv_lambda, std::size_t d, Rng& rng);

// Instance with B = H^T and uniform parities. The ensemble label is recorded
// for serialization; sparsities are measured from H.
XorSatInstance sample_instance(const BitMatrix& h, Rng& rng, const std::string& ensemble = "custom");

// R parities v^(r) = v ^ Upsilon_{floor(kappa m)}(v ^ fresh), r >= 2.
CorrelatedFamily correlate(const XorSatInstance& inst, double kappa, std::size_t r_count, Rng& rng);

// Parity path v_q^(t) = v0 ^ Upsilon_{floor(q m / Q)}(v0 ^ vt).
InterpolationPath interpolation_path(const BitMatrix& b, std::size_t t_count, std::size_t q_count, Rng& rng);

// Submatrix of the selected rows, in the given order.
BitMatrix restrict_rows(const BitMatrix& h, const std::vector<std::size_t>& rows);

// (wt_b, wt_c) = (max column sum, max row sum), as integers.
std::pair<std::size_t, std::size_t> sparsities(const BitMatrix& h);

// Distance (capped at w_max) of the first epsilon-fraction of rows -- the
// witness set used by locally generated ensembles. epsilon*rows must be
// integral.
CodeReport restrictability_probe(const BitMatrix& h, double epsilon, std::size_t w_max);

// (k,d)-biregular bipartite clause/variable incidence with no two clauses
// sharing more than one variable (factor-graph girth > 4), found by seeded
// randomized repair. Returns the m x n constraint matrix B with m = n*d/k.
// Needs enough slack: k*m distinct variable pairs must fit in C(n,2).
BitMatrix sample_girth4_biregular(std::size_t n, std::size_t k, std::size_t d, Rng& rng);

} // namespace xorsat
