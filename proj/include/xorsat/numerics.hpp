#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "xorsat/common.hpp"

namespace xorsat {

// H2(x) = -x log2 x - (1-x) log2 (1-x), with H2(0) = H2(1) = 0.
double binary_entropy(double x);

// Inverse with codomain [0, 1/2], by bisection to 1e-12.
double binary_entropy_inv(double y);

// C(n, k) as long double (exact for values below 2^64).
long double binom_ld(std::size_t n, std::size_t k);

// C(n, k) exact; fails on overflow past 2^63.
std::uint64_t binom_u64(std::size_t n, std::size_t k);

// P[Bin(m, 1/2) <= t] by exact binomial summation. t may be fractional; the
// comparison is <= as stated, so the sum runs over j = 0..floor(t).
double binomial_cdf_half(std::size_t m, double t);

// Dense symmetric-matrix helpers, sized for the tiny systems in this project.
using Mat = std::vector<std::vector<double>>;

// Solve A x = b with partial pivoting plus one step of iterative refinement.
// Fails on a singular system.
std::vector<double> solve_linear(Mat a, std::vector<double> b);

// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.
// Returns eigenvalues ascending; vectors[i] is the eigenvector of values[i].
struct EigenSym {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};
EigenSym eigen_symmetric(Mat a);

// In-place Walsh-Hadamard transform (unnormalized) of a length-2^n vector.
void fwht(std::vector<double>& v);

// Root of f on [lo, hi] by bisection; f(lo) and f(hi) must bracket. Fails
// with ErrCode::numeric otherwise.
template <typename F>
double bisect(F&& f, double lo, double hi, double tol = 1e-12, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo < 0) == (fhi < 0)) fail(ErrCode::numeric, "bisect: root not bracketed");
    for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace xorsat
