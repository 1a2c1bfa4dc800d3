#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xorsat/common.hpp"

namespace xorsat {

// Exact rational over 128-bit integers, always in lowest terms with a
// positive denominator. Large enough for the desk-scale parity calculations
// here; overflow fails loudly rather than wrapping.
class Rat {
public:
    Rat() = default;
    Rat(long long v) : num_(v), den_(1) {} // NOLINT(google-explicit-constructor)
    Rat(__int128 num, __int128 den);

    static Rat zero() { return Rat(0); }

    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;
    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }

    __int128 num() const { return num_; }
    __int128 den() const { return den_; }
    double to_double() const { return double(num_) / double(den_); }
    std::string to_string() const;

private:
    __int128 num_ = 0;
    __int128 den_ = 1;
};

// Exact K_w(x) tables for one ambient length m, built by the three-term
// recurrence in 128-bit integers. K_0(x) = 1 and K_w(0) = C(m,w).
class KravchukContext {
public:
    explicit KravchukContext(std::size_t m);

    std::size_t m() const { return m_; }
    __int128 eval(std::size_t w, std::size_t x) const;
    __int128 binom(std::size_t k) const { return binom_[k]; }

private:
    std::size_t m_;
    std::vector<std::vector<__int128>> table_; // [w][x]
    std::vector<__int128> binom_;
};

// K_w(x) = sum_beta (-1)^beta C(x,beta) C(m-x,w-beta), exact.
__int128 kravchuk_eval(std::size_t m, std::size_t w, std::size_t x);

// Probability that the XOR of independent uniform vectors of the given fixed
// weights is zero: 2^-m sum_x C(m,x) prod_i K_{w_i}(x)/C(m,w_i), exact.
Rat xor_zero_probability(std::size_t m, const std::vector<std::size_t>& weights);

// 1/2 + (1/2)(1-2p)^n.
double binomial_even_probability(std::size_t n, double p);

// (1-q)^w <= 1 - (1-1/e) q w on q in [0,1], 1 <= w <= 1/q.
bool binomial_linear_bound_check(double q, double w);

// psi(p, x) with the root delta of the implicit equation
//   x = (1/2 - delta) ((1-delta)^{p-1} - delta^{p-1}) / ((1-delta)^p + delta^p)
// found by bisection on [0, 1/2] to |residual| <= 1e-12.
struct PsiEval {
    double p = 0.0;
    double x = 0.0;
    double delta = 0.0;
    double value = 0.0;
};
PsiEval psi(double p, double x);

// (4/ln 2)(1-2x)^{(p-1)/2} + (p/2) H2(x) - 1; requires p >= 3.
double psi_upper_bound(double p, double x);

// Checks E_{x~Bin(m,1/2)}[|K_w(x)|^p] <= C(m,w)^{p/2} 2^{m psi(p, min(w/m,
// 1-w/m))} by exact enumeration over x. The w = 0 and w = m ends are trivial
// (the left side is 1 and the bound degenerates to it).
bool moment_bound_check(std::size_t m, std::size_t w, double p);

// Coefficients c with P(m-2w) = sum_k c_k K_k(w) for w = 0..ell; poly holds
// the coefficients of P in the monomial basis, low degree first.
std::vector<double> symmetric_expansion(const std::vector<double>& poly, std::size_t m, std::size_t ell);

} // namespace xorsat
