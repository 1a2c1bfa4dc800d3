#include "xorsat/kravchuk.hpp"

#include <algorithm>
#include <cmath>

#include "xorsat/numerics.hpp"

namespace xorsat {

namespace {

using u128 = unsigned __int128;

u128 uabs(__int128 v) { return v < 0 ? u128(-v) : u128(v); }

u128 gcd_u128(u128 a, u128 b) {
    while (b) {
        const u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

__int128 checked_mul(__int128 a, __int128 b) {
    __int128 out;
    if (__builtin_mul_overflow(a, b, &out)) fail(ErrCode::numeric, "rational overflow (128-bit)");
    return out;
}

__int128 checked_add(__int128 a, __int128 b) {
    __int128 out;
    if (__builtin_add_overflow(a, b, &out)) fail(ErrCode::numeric, "rational overflow (128-bit)");
    return out;
}

std::string i128_to_string(__int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    u128 u = uabs(v);
    std::string s;
    while (u) {
        s.insert(s.begin(), char('0' + int(u % 10)));
        u /= 10;
    }
    return neg ? "-" + s : s;
}

__int128 binom_i128(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    __int128 c = 1;
    for (std::size_t i = 0; i < k; ++i) {
        c = checked_mul(c, __int128(n - i));
        c /= __int128(i + 1); // exact: prefix products of binomials are integers
    }
    return c;
}

} // namespace

Rat::Rat(__int128 num, __int128 den) {
    if (den == 0) fail(ErrCode::invalid_argument, "Rat: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const u128 g = gcd_u128(uabs(num), u128(den));
    if (g > 1) {
        num /= __int128(g);
        den /= __int128(g);
    }
    num_ = num;
    den_ = den;
}

Rat Rat::operator+(const Rat& o) const {
    return Rat(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)), checked_mul(den_, o.den_));
}

Rat Rat::operator-(const Rat& o) const {
    return Rat(checked_add(checked_mul(num_, o.den_), -checked_mul(o.num_, den_)), checked_mul(den_, o.den_));
}

Rat Rat::operator*(const Rat& o) const { return Rat(checked_mul(num_, o.num_), checked_mul(den_, o.den_)); }

Rat Rat::operator/(const Rat& o) const {
    if (o.num_ == 0) fail(ErrCode::invalid_argument, "Rat: division by zero");
    return Rat(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
}

std::string Rat::to_string() const { return i128_to_string(num_) + "/" + i128_to_string(den_); }

KravchukContext::KravchukContext(std::size_t m) : m_(m) {
    table_.assign(m + 1, std::vector<__int128>(m + 1, 0));
    for (std::size_t x = 0; x <= m; ++x) table_[0][x] = 1;
    if (m >= 1)
        for (std::size_t x = 0; x <= m; ++x) table_[1][x] = __int128(m) - 2 * __int128(x);
    // (w+1) K_{w+1}(x) = (m-2x) K_w(x) - (m-w+1) K_{w-1}(x)
    for (std::size_t w = 1; w < m; ++w)
        for (std::size_t x = 0; x <= m; ++x) {
            const __int128 t =
                checked_add(checked_mul(__int128(m) - 2 * __int128(x), table_[w][x]),
                            -checked_mul(__int128(m - w + 1), table_[w - 1][x]));
            table_[w + 1][x] = t / __int128(w + 1);
        }
    binom_.resize(m + 1);
    for (std::size_t k = 0; k <= m; ++k) binom_[k] = binom_i128(m, k);
}

__int128 KravchukContext::eval(std::size_t w, std::size_t x) const {
    if (w > m_ || x > m_) fail(ErrCode::domain, "KravchukContext::eval: index out of range");
    return table_[w][x];
}

__int128 kravchuk_eval(std::size_t m, std::size_t w, std::size_t x) {
    if (w > m || x > m) fail(ErrCode::domain, "kravchuk_eval: require 0 <= w, x <= m");
    return KravchukContext(m).eval(w, x);
}

Rat xor_zero_probability(std::size_t m, const std::vector<std::size_t>& weights) {
    for (auto w : weights)
        if (w > m) fail(ErrCode::domain, "xor_zero_probability: weight exceeds m");
    const KravchukContext ctx(m);
    Rat sum = Rat::zero();
    for (std::size_t x = 0; x <= m; ++x) {
        Rat term(ctx.binom(x), 1);
        for (auto w : weights) term = term * Rat(ctx.eval(w, x), ctx.binom(w));
        sum = sum + term;
    }
    __int128 pow2 = 1;
    for (std::size_t i = 0; i < m; ++i) pow2 = checked_mul(pow2, 2);
    return sum / Rat(pow2, 1);
}

double binomial_even_probability(std::size_t n, double p) {
    if (p < 0.0 || p > 1.0) fail(ErrCode::domain, "binomial_even_probability: p outside [0,1]");
    return 0.5 + 0.5 * std::pow(1.0 - 2.0 * p, double(n));
}

bool binomial_linear_bound_check(double q, double w) {
    if (q < 0.0 || q > 1.0) fail(ErrCode::domain, "binomial_linear_bound_check: q outside [0,1]");
    if (w < 1.0 || (q > 0.0 && w > 1.0 / q)) fail(ErrCode::domain, "binomial_linear_bound_check: need 1 <= w <= 1/q");
    const double lhs = std::pow(1.0 - q, w);
    const double rhs = 1.0 - (1.0 - 1.0 / std::exp(1.0)) * q * w;
    return lhs <= rhs + 1e-12;
}

namespace {

double psi_x_of_delta(double p, double delta) {
    const double a = std::pow(1.0 - delta, p);
    const double b = std::pow(delta, p);
    const double a1 = std::pow(1.0 - delta, p - 1.0);
    const double b1 = std::pow(delta, p - 1.0);
    return (0.5 - delta) * (a1 - b1) / (a + b);
}

} // namespace

PsiEval psi(double p, double x) {
    if (p < 1.0) fail(ErrCode::domain, "psi: require p >= 1");
    if (!(x > 0.0) || x > 0.5) fail(ErrCode::domain, "psi: require x in (0, 1/2]");
    PsiEval out;
    out.p = p;
    out.x = x;
    if (x == 0.5) {
        // delta = 0 solves the implicit equation at x = 1/2 by direct
        // substitution (the 0^0 limit makes the residual form degenerate).
        out.delta = 0.0;
    } else {
        out.delta = bisect([&](double d) { return psi_x_of_delta(p, d) - x; }, 0.0, 0.5, 1e-15, 300);
        const double resid = psi_x_of_delta(p, out.delta) - x;
        if (std::fabs(resid) > 1e-12) fail(ErrCode::numeric, "psi: implicit delta root residual above 1e-12");
    }
    const double a = std::pow(1.0 - out.delta, p);
    const double b = std::pow(out.delta, p);
    out.value = p - 1.0 + std::log2(a + b) - 0.5 * p * binary_entropy(x) - p * x * std::log2(1.0 - 2.0 * out.delta);
    return out;
}

double psi_upper_bound(double p, double x) {
    if (p < 3.0) fail(ErrCode::domain, "psi_upper_bound: the bound assumes p >= 3");
    if (x < 0.0 || x > 0.5) fail(ErrCode::domain, "psi_upper_bound: require x in [0, 1/2]");
    return (4.0 / std::log(2.0)) * std::pow(1.0 - 2.0 * x, 0.5 * (p - 1.0)) + 0.5 * p * binary_entropy(x) - 1.0;
}

bool moment_bound_check(std::size_t m, std::size_t w, double p) {
    if (m > 16) fail(ErrCode::domain, "moment_bound_check: exact enumeration supports m <= 16");
    if (p != 2.0 && p != 3.0 && p != 4.0 && p != 6.0)
        fail(ErrCode::domain, "moment_bound_check: p must be one of {2,3,4,6}");
    if (w > m) fail(ErrCode::domain, "moment_bound_check: w exceeds m");
    if (w == 0 || w == m) return true; // |K_w| = 1, bound degenerates to equality

    const KravchukContext ctx(m);
    long double lhs = 0.0L;
    for (std::size_t x = 0; x <= m; ++x) {
        const long double k = std::fabs((long double)(double)ctx.eval(w, x));
        lhs += (long double)(double)ctx.binom(x) * std::pow(k, (long double)p);
    }
    lhs = std::ldexp(lhs, -int(m)); // expectation under Bin(m, 1/2)

    const double xfrac = std::min(double(w) / double(m), 1.0 - double(w) / double(m));
    const double psival = psi(p, xfrac).value;
    const long double log2rhs =
        0.5L * (long double)p * std::log2((long double)(double)ctx.binom(w)) + (long double)m * (long double)psival;
    // 1e-9 relative slack absorbs the float evaluation of psi at equality
    // points (e.g. p = 2, w = m/2).
    return std::log2(lhs) <= log2rhs + 1e-9L;
}

std::vector<double> symmetric_expansion(const std::vector<double>& poly, std::size_t m, std::size_t ell) {
    if (poly.empty()) fail_invalid("symmetric_expansion: empty polynomial");
    if (poly.size() > ell + 1) fail_invalid("symmetric_expansion: deg(P) exceeds ell");
    if (ell > m) fail_invalid("symmetric_expansion: ell exceeds m");

    const KravchukContext ctx(m);
    auto eval_p = [&](double s) {
        double acc = 0.0;
        for (std::size_t i = poly.size(); i-- > 0;) acc = acc * s + poly[i];
        return acc;
    };

    Mat a(ell + 1, std::vector<double>(ell + 1));
    std::vector<double> rhs(ell + 1);
    double pmax = 0.0;
    for (std::size_t w = 0; w <= ell; ++w) {
        for (std::size_t j = 0; j <= ell; ++j) a[w][j] = double(ctx.eval(j, w));
        rhs[w] = eval_p(double(m) - 2.0 * double(w));
        pmax = std::max(pmax, std::fabs(rhs[w]));
    }
    std::vector<double> c = solve_linear(a, rhs);

    for (std::size_t w = 0; w <= ell; ++w) {
        double acc = 0.0;
        for (std::size_t j = 0; j <= ell; ++j) acc += a[w][j] * c[j];
        if (std::fabs(acc - rhs[w]) > 1e-9 * std::max(1.0, pmax))
            fail(ErrCode::numeric, "symmetric_expansion: solve residual above tolerance");
    }
    return c;
}

} // namespace xorsat
