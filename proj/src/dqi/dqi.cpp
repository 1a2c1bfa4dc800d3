#include "xorsat/dqi.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "xorsat/kravchuk.hpp"
#include "xorsat/numerics.hpp"

namespace xorsat {

namespace {

double eval_poly(const std::vector<double>& coeffs, double s) {
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * s + coeffs[i];
    return acc;
}

void normalize_or_fail(std::vector<double>& amp) {
    long double norm2 = 0.0L;
    for (double a : amp) norm2 += (long double)a * a;
    if (norm2 <= 0.0L) fail(ErrCode::numeric, "DQI state is identically zero (degenerate polynomial)");
    const double inv = double(1.0L / std::sqrt(norm2));
    for (double& a : amp) a *= inv;
}

void check_state_bytes(std::size_t qubits, const char* who) {
    const std::uint64_t bytes = (std::uint64_t(1) << qubits) * sizeof(double);
    if (bytes > Caps::get().state_bytes)
        fail(ErrCode::cap_exceeded,
             std::string(who) + ": amplitude vector of " + std::to_string(bytes) + " bytes exceeds cap");
}

} // namespace

DqiPolynomial make_dqi_polynomial(const std::vector<double>& p_coeffs, std::size_t m, std::size_t ell) {
    DqiPolynomial poly;
    poly.ell = ell;
    poly.p_coeffs = p_coeffs;
    poly.c_coeffs = symmetric_expansion(p_coeffs, m, ell);
    poly.w_coeffs.resize(ell + 1);
    for (std::size_t k = 0; k <= ell; ++k)
        poly.w_coeffs[k] = poly.c_coeffs[k] * std::sqrt((double)binom_ld(m, k));
    return poly;
}

DqiPolynomial uniform_w_polynomial(std::size_t m, std::size_t ell) {
    // Recover P from c by evaluating sum_k c_k K_k(w) at w = 0..ell and
    // interpolating a degree-ell polynomial in s = m - 2w.
    const KravchukContext ctx(m);
    std::vector<double> c(ell + 1);
    for (std::size_t k = 0; k <= ell; ++k) c[k] = 1.0 / std::sqrt((double)binom_ld(m, k));

    Mat vand(ell + 1, std::vector<double>(ell + 1));
    std::vector<double> rhs(ell + 1);
    for (std::size_t w = 0; w <= ell; ++w) {
        const double s = double(m) - 2.0 * double(w);
        double pw = 1.0;
        for (std::size_t j = 0; j <= ell; ++j) {
            vand[w][j] = pw;
            pw *= s;
        }
        double acc = 0.0;
        for (std::size_t k = 0; k <= ell; ++k) acc += c[k] * double(ctx.eval(k, w));
        rhs[w] = acc;
    }
    DqiPolynomial poly;
    poly.ell = ell;
    poly.p_coeffs = solve_linear(vand, rhs);
    poly.c_coeffs = std::move(c);
    poly.w_coeffs.resize(ell + 1);
    for (std::size_t k = 0; k <= ell; ++k)
        poly.w_coeffs[k] = poly.c_coeffs[k] * std::sqrt((double)binom_ld(m, k));
    return poly;
}

DqiState dqi_state_direct(const XorSatInstance& inst, const DqiPolynomial& poly) {
    const std::size_t n = inst.n();
    if (n > 20) fail_invalid("dqi_state_direct: n exceeds the 20-qubit cap");
    check_state_bytes(n, "dqi_state_direct");
    DqiState state;
    state.n = n;
    state.amplitudes.assign(std::size_t(1) << n, 0.0);
    const double m = double(inst.m());
    gray_sweep(inst.B, inst.v, [&](std::uint32_t z, std::size_t viol) {
        state.amplitudes[z] = eval_poly(poly.p_coeffs, m - 2.0 * double(viol));
    });
    normalize_or_fail(state.amplitudes);
    return state;
}

DqiState dqi_state_syndrome(const XorSatInstance& inst, const DqiPolynomial& poly) {
    const std::size_t n = inst.n();
    const std::size_t m = inst.m();
    if (n > 20) fail_invalid("dqi_state_syndrome: n exceeds the 20-qubit cap");
    check_state_bytes(n, "dqi_state_syndrome");
    long double weight_count = 0.0L;
    for (std::size_t k = 0; k <= poly.ell; ++k) weight_count += binom_ld(m, k);
    if (weight_count > (long double)Caps::get().decode_table_entries)
        fail(ErrCode::cap_exceeded, "dqi_state_syndrome: too many weight <= ell vectors");

    DqiState state;
    state.n = n;
    state.amplitudes.assign(std::size_t(1) << n, 0.0);

    // Accumulate c_{|y|} (-1)^{v.y} at index pack(B^T y) over all |y| <= ell;
    // column i of B^T is row i of B, so the syndrome is a running row XOR.
    std::uint32_t syndrome = 0;
    bool parity = false;
    std::vector<std::uint32_t> rows(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::uint32_t p = 0;
        const BitVec& row = inst.B.row(i);
        for (std::size_t c = row.next_set(0); c < n; c = row.next_set(c + 1)) p |= std::uint32_t(1) << c;
        rows[i] = p;
    }

    auto rec = [&](auto&& self, std::size_t start, std::size_t weight) -> void {
        state.amplitudes[syndrome] += (parity ? -1.0 : 1.0) * poly.c_coeffs[weight];
        if (weight == poly.ell) return;
        for (std::size_t i = start; i < m; ++i) {
            syndrome ^= rows[i];
            parity ^= inst.v.get(i);
            self(self, i + 1, weight + 1);
            syndrome ^= rows[i];
            parity ^= inst.v.get(i);
        }
    };
    rec(rec, 0, 0);

    fwht(state.amplitudes);
    normalize_or_fail(state.amplitudes);
    return state;
}

DqiState dqi_pipeline_trace(const XorSatInstance& inst, const DqiPolynomial& poly, const DecodeTable& table) {
    const std::size_t n = inst.n();
    const std::size_t m = inst.m();
    if (n + m > 26) fail_invalid("dqi_pipeline_trace: n + m exceeds the 26-qubit cap");
    check_state_bytes(n + m, "dqi_pipeline_trace");
    if (table.n_checks() != n) fail_invalid("dqi_pipeline_trace: table checks != n");
    if (table.ell() < poly.ell) fail_invalid("dqi_pipeline_trace: table ell below polynomial degree");

    // Register layout: index = (y << n) | s with y the m-bit Dicke register.
    std::vector<double> amp(std::size_t(1) << (n + m), 0.0);

    // Step 1: weighted Dicke superposition sum_k w_k C(m,k)^{-1/2} sum_{|y|=k} |y>|0>.
    std::vector<double> dicke_amp(poly.ell + 1);
    for (std::size_t k = 0; k <= poly.ell; ++k)
        dicke_amp[k] = poly.w_coeffs[k] / std::sqrt((double)binom_ld(m, k));
    for (std::uint64_t y = 0; y < (std::uint64_t(1) << m); ++y) {
        const std::size_t w = std::size_t(std::popcount(y));
        if (w <= poly.ell) amp[std::size_t(y) << n] = dicke_amp[w];
    }
    normalize_or_fail(amp);

    // Step 2: phases (-1)^{v.y}.
    std::uint32_t vmask = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (inst.v.get(i)) vmask |= std::uint32_t(1) << i;
    for (std::uint64_t y = 0; y < (std::uint64_t(1) << m); ++y)
        if (std::popcount(std::uint32_t(y) & vmask) & 1) amp[std::size_t(y) << n] = -amp[std::size_t(y) << n];

    // Step 3: syndrome isometry |y>|0> -> |y>|B^T y>.
    std::vector<std::uint32_t> rows(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::uint32_t p = 0;
        const BitVec& row = inst.B.row(i);
        for (std::size_t c = row.next_set(0); c < n; c = row.next_set(c + 1)) p |= std::uint32_t(1) << c;
        rows[i] = p;
    }
    for (std::uint64_t y = (std::uint64_t(1) << m); y-- > 0;) {
        const double a = amp[std::size_t(y) << n];
        if (a == 0.0) continue;
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < m; ++i)
            if ((y >> i) & 1) s ^= rows[i];
        amp[std::size_t(y) << n] = 0.0;
        amp[(std::size_t(y) << n) | s] = a;
    }

    // Step 4: decoder uncomputation O_B: |y>|B^T y> -> |B^T y> on the n
    // register. The table must return exactly y for each populated pair.
    std::vector<double> out(std::size_t(1) << n, 0.0);
    BitVec syn(n);
    for (std::uint64_t y = 0; y < (std::uint64_t(1) << m); ++y) {
        for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s) {
            const double a = amp[(std::size_t(y) << n) | s];
            if (a == 0.0) continue;
            for (std::size_t c = 0; c < n; ++c) syn.set(c, (s >> c) & 1);
            const BitVec& err = table.decode(syn);
            std::uint64_t packed_err = 0;
            for (std::size_t i = err.next_set(0); i < m; i = err.next_set(i + 1)) packed_err |= std::uint64_t(1) << i;
            if (packed_err != y)
                fail(ErrCode::numeric, "dqi_pipeline_trace: decoder returned a different error than the register");
            out[s] += a;
        }
    }

    // Step 5: Hadamard transform of the n register.
    fwht(out);
    normalize_or_fail(out);
    DqiState state;
    state.n = n;
    state.amplitudes = std::move(out);
    return state;
}

double dqi_expected_fraction(const DqiState& state, const XorSatInstance& inst) {
    if (state.n != inst.n()) fail_invalid("dqi_expected_fraction: state/instance mismatch");
    long double acc = 0.0L;
    const double m = double(inst.m());
    gray_sweep(inst.B, inst.v, [&](std::uint32_t z, std::size_t viol) {
        const long double a = state.amplitudes[z];
        acc += a * a * (long double)((m - double(viol)) / m);
    });
    return double(acc);
}

double semicircle_value(double x) {
    if (x < 0.0 || x > 1.0) fail(ErrCode::domain, "semicircle_value: x outside [0,1]");
    const double s = std::sqrt(0.5 * x) + std::sqrt(0.5 * (1.0 - x));
    return s * s;
}

DqiOptimum dqi_optimal_coefficients(const XorSatInstance& inst, std::size_t ell) {
    const std::size_t n = inst.n();
    if (n > 18) fail_invalid("dqi_optimal_coefficients: n exceeds the 18-variable cap");
    const std::size_t dim = ell + 1;
    const double m = double(inst.m());

    // Moment forms in the scaled monomial basis t^a, t = f/m:
    //   N_ab = sum_x t^{a+b},  A_ab = sum_x t^{a+b} g(x)/m.
    std::vector<long double> pow_sum(2 * dim, 0.0L), pow_g_sum(2 * dim, 0.0L);
    gray_sweep(inst.B, inst.v, [&](std::uint32_t, std::size_t viol) {
        const long double t = (m - 2.0 * double(viol)) / m;
        const long double g = (m - double(viol)) / m;
        long double p = 1.0L;
        for (std::size_t e = 0; e < 2 * dim; ++e) {
            pow_sum[e] += p;
            pow_g_sum[e] += p * g;
            p *= t;
        }
    });
    Mat nmat(dim, std::vector<double>(dim)), amat(dim, std::vector<double>(dim));
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            nmat[a][b] = double(pow_sum[a + b]);
            amat[a][b] = double(pow_g_sum[a + b]);
        }

    // Cholesky of N; failure means fewer than ell+1 distinct f-values.
    Mat l(dim, std::vector<double>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = nmat[i][j];
            for (std::size_t t = 0; t < j; ++t) s -= l[i][t] * l[j][t];
            if (i == j) {
                if (s <= 1e-9 * std::fabs(nmat[i][i]))
                    fail(ErrCode::numeric, "dqi_optimal_coefficients: N is singular on the attained f-values");
                l[i][j] = std::sqrt(s);
            } else {
                l[i][j] = s / l[j][j];
            }
        }
    }
    auto fwd = [&](std::vector<double> b) { // solve L x = b
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < i; ++j) b[i] -= l[i][j] * b[j];
            b[i] /= l[i][i];
        }
        return b;
    };
    auto bwd = [&](std::vector<double> b) { // solve L^T x = b
        for (std::size_t i = dim; i-- > 0;) {
            for (std::size_t j = i + 1; j < dim; ++j) b[i] -= l[j][i] * b[j];
            b[i] /= l[i][i];
        }
        return b;
    };

    // M = L^{-1} A L^{-T}, then the top eigenpair.
    Mat mmat(dim, std::vector<double>(dim));
    for (std::size_t c = 0; c < dim; ++c) {
        std::vector<double> col(dim);
        for (std::size_t r = 0; r < dim; ++r) col[r] = amat[r][c];
        col = fwd(col);
        for (std::size_t r = 0; r < dim; ++r) mmat[r][c] = col[r];
    }
    for (std::size_t r = 0; r < dim; ++r) {
        std::vector<double> row = mmat[r];
        row = fwd(row); // applying L^{-1} to rows implements right-multiplying by L^{-T}
        mmat[r] = row;
    }
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = r + 1; c < dim; ++c) {
            const double s = 0.5 * (mmat[r][c] + mmat[c][r]);
            mmat[r][c] = mmat[c][r] = s;
        }
    const EigenSym eig = eigen_symmetric(mmat);
    std::vector<double> u = eig.vectors.back();
    double value = eig.values.back();

    // Power-iteration fallback on M, kept if it finds a larger quotient.
    {
        std::vector<double> w(dim, 1.0);
        for (int it = 0; it < 300; ++it) {
            std::vector<double> next(dim, 0.0);
            for (std::size_t r = 0; r < dim; ++r)
                for (std::size_t c = 0; c < dim; ++c) next[r] += mmat[r][c] * w[c];
            double norm = 0.0;
            for (double x : next) norm += x * x;
            norm = std::sqrt(norm);
            if (norm < 1e-300) break;
            for (double& x : next) x /= norm;
            w = std::move(next);
        }
        double num = 0.0, den = 0.0;
        for (std::size_t r = 0; r < dim; ++r) {
            double mw = 0.0;
            for (std::size_t c = 0; c < dim; ++c) mw += mmat[r][c] * w[c];
            num += w[r] * mw;
            den += w[r] * w[r];
        }
        if (den > 0 && num / den > value) {
            value = num / den;
            u = w;
        }
    }
    std::vector<double> coeffs = bwd(u);

    DqiOptimum out;
    out.poly.ell = ell;
    out.poly.p_coeffs = coeffs;
    // Rescale: amplitudes used P(f) with t = f/m, so convert t-basis
    // coefficients to plain monomials in f.
    for (std::size_t a = 0; a < dim; ++a) out.poly.p_coeffs[a] = coeffs[a] / std::pow(m, double(a));
    out.poly.c_coeffs = symmetric_expansion(out.poly.p_coeffs, inst.m(), ell);
    out.poly.w_coeffs.resize(dim);
    for (std::size_t k = 0; k < dim; ++k)
        out.poly.w_coeffs[k] = out.poly.c_coeffs[k] * std::sqrt((double)binom_ld(inst.m(), k));
    out.expected_fraction = value;
    return out;
}

std::vector<BitVec> sample_measurement(const DqiState& state, std::size_t shots, Rng& rng) {
    if (shots < 1) fail_invalid("sample_measurement: shots must be positive");
    std::vector<double> cdf(state.amplitudes.size());
    long double acc = 0.0L;
    for (std::size_t i = 0; i < cdf.size(); ++i) {
        acc += (long double)state.amplitudes[i] * state.amplitudes[i];
        cdf[i] = double(acc);
    }
    std::vector<BitVec> out;
    out.reserve(shots);
    for (std::size_t s = 0; s < shots; ++s) {
        const double u = rng.real53() * cdf.back();
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::uint32_t idx = std::uint32_t(it == cdf.end() ? cdf.size() - 1 : std::size_t(it - cdf.begin()));
        out.push_back(unpack_assignment(idx, state.n));
    }
    return out;
}

double state_distance(const DqiState& a, const DqiState& b) {
    if (a.n != b.n) fail_invalid("state_distance: qubit mismatch");
    std::size_t imax = 0;
    for (std::size_t i = 1; i < a.amplitudes.size(); ++i)
        if (std::fabs(a.amplitudes[i]) > std::fabs(a.amplitudes[imax])) imax = i;
    const double sign = (a.amplitudes[imax] < 0) == (b.amplitudes[imax] < 0) ? 1.0 : -1.0;
    double dmax = 0.0;
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
        dmax = std::max(dmax, std::fabs(a.amplitudes[i] - sign * b.amplitudes[i]));
    return dmax;
}

} // namespace xorsat
