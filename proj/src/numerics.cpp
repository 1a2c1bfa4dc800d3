#include "xorsat/numerics.hpp"

#include <cmath>
#include <cstdlib>

namespace xorsat {

double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) fail(ErrCode::domain, "binary_entropy: x outside [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double binary_entropy_inv(double y) {
    if (y < 0.0 || y > 1.0) fail(ErrCode::domain, "binary_entropy_inv: y outside [0,1]");
    if (y == 0.0) return 0.0;
    if (y == 1.0) return 0.5;
    return bisect([y](double x) { return binary_entropy(x) - y; }, 0.0, 0.5);
}

long double binom_ld(std::size_t n, std::size_t k) {
    if (k > n) return 0.0L;
    if (k > n - k) k = n - k;
    long double c = 1.0L;
    for (std::size_t i = 0; i < k; ++i) c = c * (long double)(n - i) / (long double)(i + 1);
    return c;
}

std::uint64_t binom_u64(std::size_t n, std::size_t k) {
    const long double c = binom_ld(n, k);
    if (c > 9.2e18L) fail(ErrCode::numeric, "binom_u64: value exceeds 64 bits");
    return (std::uint64_t)(c + 0.5L);
}

double binomial_cdf_half(std::size_t m, double t) {
    if (t < 0) return 0.0;
    long double sum = 0.0L;
    long double c = 1.0L;
    for (std::size_t j = 0; j <= m && (double)j <= t; ++j) {
        sum += c;
        c = c * (long double)(m - j) / (long double)(j + 1);
    }
    return (double)(sum * std::pow(0.5L, (long double)m));
}

std::vector<double> solve_linear(Mat a, std::vector<double> b) {
    const std::size_t n = b.size();
    if (a.size() != n) fail_invalid("solve_linear: shape mismatch");
    const Mat a0 = a;
    const std::vector<double> b0 = b;

    auto eliminate = [n](Mat& m, std::vector<double>& rhs) {
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            for (std::size_t r = c + 1; r < n; ++r)
                if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
            if (std::fabs(m[piv][c]) < 1e-300) fail(ErrCode::numeric, "solve_linear: singular system");
            std::swap(m[c], m[piv]);
            std::swap(rhs[c], rhs[piv]);
            for (std::size_t r = c + 1; r < n; ++r) {
                const double f = m[r][c] / m[c][c];
                if (f == 0.0) continue;
                for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
                rhs[r] -= f * rhs[c];
            }
        }
        std::vector<double> x(n);
        for (std::size_t i = n; i-- > 0;) {
            double s = rhs[i];
            for (std::size_t j = i + 1; j < n; ++j) s -= m[i][j] * x[j];
            x[i] = s / m[i][i];
        }
        return x;
    };

    std::vector<double> x = eliminate(a, b);

    // One refinement step with a long double residual.
    std::vector<double> resid(n);
    for (std::size_t i = 0; i < n; ++i) {
        long double s = b0[i];
        for (std::size_t j = 0; j < n; ++j) s -= (long double)a0[i][j] * x[j];
        resid[i] = (double)s;
    }
    Mat a1 = a0;
    std::vector<double> dx = eliminate(a1, resid);
    for (std::size_t i = 0; i < n; ++i) x[i] += dx[i];
    return x;
}

EigenSym eigen_symmetric(Mat a) {
    const std::size_t n = a.size();
    Mat v(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a[i][p], aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double api = a[p][i], aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = v[i][p], viq = v[i][q];
                    v[i][p] = c * vip - s * viq;
                    v[i][q] = s * vip + c * viq;
                }
            }
        }
    }

    EigenSym out;
    out.values.resize(n);
    out.vectors.assign(n, std::vector<double>(n));
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a[order[j]][order[j]] < a[order[i]][order[i]]) std::swap(order[i], order[j]);
    for (std::size_t i = 0; i < n; ++i) {
        out.values[i] = a[order[i]][order[i]];
        for (std::size_t r = 0; r < n; ++r) out.vectors[i][r] = v[r][order[i]];
    }
    return out;
}

void fwht(std::vector<double>& v) {
    const std::size_t n = v.size();
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double x = v[j];
                const double y = v[j + h];
                v[j] = x + y;
                v[j + h] = x - y;
            }
        }
    }
}

} // namespace xorsat
