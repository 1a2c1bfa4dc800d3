#pragma once

#include <cstdint>
#include <vector>

#include "xorsat/decode.hpp"
#include "xorsat/objective.hpp"

namespace xorsat {

// A degree-ell polynomial P together with its expansion in the elementary
// XOR-monomial basis: c = symmetric_expansion(P) and w_k = c_k sqrt(C(m,k)).
struct DqiPolynomial {
    std::size_t ell = 0;
    std::vector<double> p_coeffs; // monomial basis, low degree first
    std::vector<double> c_coeffs; // length ell+1
    std::vector<double> w_coeffs; // length ell+1
};

DqiPolynomial make_dqi_polynomial(const std::vector<double>& p_coeffs, std::size_t m, std::size_t ell);

// Uniform-w preset: w_k constant, i.e. c_k = 1/sqrt(C(m,k)).
DqiPolynomial uniform_w_polynomial(std::size_t m, std::size_t ell);

// Normalized real amplitude vector over F2^n; amplitudes[x] uses the packed
// assignment x (variable j at bit j).
struct DqiState {
    std::size_t n = 0;
    std::vector<double> amplitudes;
};

// amplitude(x) = P(f(x)) / sqrt(sum P(f)^2), by direct objective sweep.
DqiState dqi_state_direct(const XorSatInstance& inst, const DqiPolynomial& poly);

// Builds sum_k c_k sum_{|y|=k} (-1)^{v.y} |B^T y> on the n-bit register
// (amplitude collisions accumulate), applies the n-fold Hadamard transform
// and normalizes. Equals dqi_state_direct up to global sign.
DqiState dqi_state_syndrome(const XorSatInstance& inst, const DqiPolynomial& poly);

// Simulates the five pipeline steps on the full (m+n)-qubit amplitude
// vector: weighted Dicke superposition, Z^{v_i} phasing, syndrome isometry,
// decoder uncomputation through the table, final Hadamards. Requires a
// complete table (2 ell + 1 <= code distance); decoder errors propagate.
DqiState dqi_pipeline_trace(const XorSatInstance& inst, const DqiPolynomial& poly, const DecodeTable& table);

// sum_x amplitude(x)^2 g(x)/m.
double dqi_expected_fraction(const DqiState& state, const XorSatInstance& inst);

// Maximizer of <g> = (c^T A c)/(c^T N c) over polynomials of degree <= ell,
// assembled by one objective sweep; returns the polynomial and the attained
// expected fraction.
struct DqiOptimum {
    DqiPolynomial poly;
    double expected_fraction = 0.0;
};
DqiOptimum dqi_optimal_coefficients(const XorSatInstance& inst, std::size_t ell);

// (sqrt(x/2) + sqrt((1-x)/2))^2 for x = ell/m in [0, 1].
double semicircle_value(double x);

// i.i.d. computational-basis samples from amplitude^2.
std::vector<BitVec> sample_measurement(const DqiState& state, std::size_t shots, Rng& rng);

// Max |amplitude| difference after aligning the sign of the
// largest-magnitude amplitude; the route-equivalence metric.
double state_distance(const DqiState& a, const DqiState& b);

} // namespace xorsat
