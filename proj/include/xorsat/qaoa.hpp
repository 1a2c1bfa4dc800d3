#pragma once

#include <cstdint>
#include <vector>

#include "xorsat/ensembles.hpp"

namespace xorsat {

struct Qaoa1Params {
    double gamma = 0.0;
    double beta = 0.0;
    double s = 0.0; // sin gamma
    double c = 1.0; // cos gamma
    double p = 1.0; // cos 2 beta
    double q = 0.0; // sin 2 beta

    Qaoa1Params() = default;
    Qaoa1Params(double gamma_, double beta_);
};

// Closed-form parity-averaged depth-1 value
//   1/2 - (i s / 4) ((p + i q c^{k lambda})^k - (p - i q c^{k lambda})^k).
// k*lambda must be integral; the bracket is purely imaginary and the
// imaginary residue of the total is checked against 1e-12.
double qaoa1_formula(std::size_t k, double lambda, double gamma, double beta);

// Same closed form with an explicit per-variable cosine exponent: `others`
// is the number of clauses sharing each variable of a clause beyond the
// clause itself. On a girth>4 (k,d)-biregular instance the parity-averaged
// depth-1 value equals this with others = d - 1 exactly.
double qaoa1_local_value(std::size_t k, std::size_t others, double gamma, double beta);

// Angle choice used for the large-k evaluation: gamma = sqrt(ln(4k/pi^2) /
// (k lambda)), beta = 1/(2 sqrt(k)).
Qaoa1Params qaoa1_reference_angles(std::size_t k, double lambda);

struct Qaoa1Optimum {
    double gamma = 0.0;
    double beta = 0.0;
    double value = 0.5;
};

// 256x256 grid over [0, 2pi)^2 plus local zoom refinement; the returned
// value also dominates the reference-angle evaluation.
Qaoa1Optimum qaoa1_optimize(std::size_t k, double lambda);

// Exact depth-1 expectation <g>/m on one instance by dense statevector
// simulation (e^{-i beta sum X} e^{-i gamma g} |+>^n); n <= 20.
double qaoa1_statevector_expectation(const XorSatInstance& inst, double gamma, double beta);

// Exact per-instance depth-1 expectation evaluated clause by clause through
// the reverse causal cone. Exact on any instance (the unit suite checks it
// against the dense statevector both on and off the girth>4 domain); sparse
// girth>4 graphs keep the precomputed solution spaces small. Sweeping many
// parity vectors reuses the angle-independent combinatorics.
class Qaoa1ConeEvaluator {
public:
    explicit Qaoa1ConeEvaluator(const BitMatrix& b);

    // <g>/m for the given parities and angles; exact up to float rounding.
    double expectation(const BitVec& v, double gamma, double beta) const;

    // Average of `expectation` over `samples` uniform parity draws; also
    // reports the sample standard deviation of the per-draw values.
    struct MeanResult {
        double mean = 0.0;
        double stddev = 0.0;
    };
    MeanResult parity_mean(double gamma, double beta, std::size_t samples, Rng& rng) const;

private:
    struct Term {
        std::uint32_t t_weight;          // |T|
        std::vector<std::uint32_t> sols; // each a clause-index list, stored flat
        std::vector<std::uint32_t> sol_sizes;
        std::uint32_t cone_size; // |K_T|
    };
    std::size_t m_ = 0;
    std::size_t n_ = 0;
    std::size_t k_max_ = 0;
    std::vector<std::uint32_t> clause_arity_;
    std::vector<std::vector<Term>> clause_terms_; // per clause, per T subset
};

} // namespace xorsat
