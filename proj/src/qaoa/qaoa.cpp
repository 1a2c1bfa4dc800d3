#include "xorsat/qaoa.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>

#include "xorsat/numerics.hpp"
#include "xorsat/objective.hpp"

namespace xorsat {

Qaoa1Params::Qaoa1Params(double gamma_, double beta_)
    : gamma(gamma_), beta(beta_), s(std::sin(gamma_)), c(std::cos(gamma_)), p(std::cos(2.0 * beta_)),
      q(std::sin(2.0 * beta_)) {}

namespace {

double qaoa1_closed_form(std::size_t k, std::size_t cos_power, double gamma, double beta) {
    const Qaoa1Params par(gamma, beta);
    const std::complex<double> zp(par.p, par.q * std::pow(par.c, double(cos_power)));
    const std::complex<double> zm = std::conj(zp);
    std::complex<double> zpk(1.0, 0.0), zmk(1.0, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        zpk *= zp;
        zmk *= zm;
    }
    const std::complex<double> val =
        0.5 - std::complex<double>(0.0, par.s / 4.0) * (zpk - zmk);
    if (std::fabs(val.imag()) > 1e-12) fail(ErrCode::numeric, "qaoa1 closed form: imaginary residue above 1e-12");
    return val.real();
}

} // namespace

double qaoa1_formula(std::size_t k, double lambda, double gamma, double beta) {
    const double deg = double(k) * lambda;
    const double rounded = std::round(deg);
    if (std::fabs(deg - rounded) > 1e-9 || rounded < 0)
        fail(ErrCode::domain, "qaoa1_formula: k*lambda must be a nonnegative integer");
    return qaoa1_closed_form(k, std::size_t(rounded), gamma, beta);
}

double qaoa1_local_value(std::size_t k, std::size_t others, double gamma, double beta) {
    return qaoa1_closed_form(k, others, gamma, beta);
}

Qaoa1Params qaoa1_reference_angles(std::size_t k, double lambda) {
    const double gamma = std::sqrt(std::log(4.0 * double(k) / (M_PI * M_PI)) / (double(k) * lambda));
    const double beta = 0.5 / std::sqrt(double(k));
    return Qaoa1Params(gamma, beta);
}

Qaoa1Optimum qaoa1_optimize(std::size_t k, double lambda) {
    Qaoa1Optimum best;
    auto consider = [&](double gamma, double beta) {
        const double v = qaoa1_formula(k, lambda, gamma, beta);
        if (v > best.value) {
            best.value = v;
            best.gamma = gamma;
            best.beta = beta;
        }
    };
    const double two_pi = 2.0 * M_PI;
    for (int i = 0; i < 256; ++i)
        for (int j = 0; j < 256; ++j) consider(two_pi * i / 256.0, two_pi * j / 256.0);
    double span = two_pi / 256.0;
    for (int round = 0; round < 6; ++round) {
        const double g0 = best.gamma, b0 = best.beta;
        for (int i = -16; i <= 16; ++i)
            for (int j = -16; j <= 16; ++j) consider(g0 + span * i / 16.0, b0 + span * j / 16.0);
        span /= 16.0;
    }
    const Qaoa1Params ref = qaoa1_reference_angles(k, lambda);
    consider(ref.gamma, ref.beta);
    return best;
}

double qaoa1_statevector_expectation(const XorSatInstance& inst, double gamma, double beta) {
    const std::size_t n = inst.n();
    if (n > 20) fail_invalid("qaoa1_statevector_expectation: n exceeds the 20-qubit cap");
    const std::size_t dim = std::size_t(1) << n;

    std::vector<int> g(dim, 0);
    gray_sweep(inst.B, inst.v, [&](std::uint32_t z, std::size_t viol) { g[z] = int(inst.m()) - int(viol); });

    // e^{-i gamma g} |+>^n
    std::vector<std::complex<double>> amp(dim);
    const double a0 = 1.0 / std::sqrt(double(dim));
    for (std::size_t x = 0; x < dim; ++x) amp[x] = std::polar(a0, -gamma * double(g[x]));

    // e^{-i beta X} per qubit: [[cos b, -i sin b], [-i sin b, cos b]]
    const std::complex<double> cb(std::cos(beta), 0.0);
    const std::complex<double> msb(0.0, -std::sin(beta));
    for (std::size_t qbit = 0; qbit < n; ++qbit) {
        const std::size_t stride = std::size_t(1) << qbit;
        for (std::size_t base = 0; base < dim; base += stride << 1) {
            for (std::size_t off = 0; off < stride; ++off) {
                const auto x0 = amp[base + off];
                const auto x1 = amp[base + off + stride];
                amp[base + off] = cb * x0 + msb * x1;
                amp[base + off + stride] = msb * x0 + cb * x1;
            }
        }
    }

    long double acc = 0.0L;
    for (std::size_t x = 0; x < dim; ++x) acc += (long double)std::norm(amp[x]) * g[x];
    return double(acc / (long double)inst.m());
}

Qaoa1ConeEvaluator::Qaoa1ConeEvaluator(const BitMatrix& b) : m_(b.rows()), n_(b.cols()) {
    std::vector<std::vector<std::uint32_t>> clause_vars(m_);
    std::vector<std::vector<std::uint32_t>> var_clauses(n_);
    clause_arity_.resize(m_);
    for (std::size_t a = 0; a < m_; ++a) {
        for (std::size_t c = b.row(a).next_set(0); c < n_; c = b.row(a).next_set(c + 1)) {
            clause_vars[a].push_back(std::uint32_t(c));
            var_clauses[c].push_back(std::uint32_t(a));
        }
        clause_arity_[a] = std::uint32_t(clause_vars[a].size());
        k_max_ = std::max(k_max_, clause_vars[a].size());
    }
    if (k_max_ > 20) fail(ErrCode::cap_exceeded, "Qaoa1ConeEvaluator: clause arity above the 20-variable cap");

    clause_terms_.resize(m_);
    std::vector<std::uint32_t> overlap(m_, 0);
    for (std::size_t a = 0; a < m_; ++a) {
        const auto& vars = clause_vars[a];
        const std::size_t ka = vars.size();
        for (std::uint32_t t_mask = 1; t_mask < (1u << ka); ++t_mask) {
            // K_T: clauses with odd overlap with the Y-positions T.
            std::vector<std::uint32_t> touched;
            for (std::size_t j = 0; j < ka; ++j)
                if ((t_mask >> j) & 1)
                    for (auto cl : var_clauses[vars[j]]) {
                        if (overlap[cl] == 0) touched.push_back(cl);
                        ++overlap[cl];
                    }
            std::vector<std::uint32_t> cone;
            for (auto cl : touched)
                if (overlap[cl] & 1) cone.push_back(cl);
            for (auto cl : touched) overlap[cl] = 0;
            std::sort(cone.begin(), cone.end());

            // Subsets of the cone whose supports XOR to S_a.
            BitMatrix sys(n_, cone.size());
            for (std::size_t ci = 0; ci < cone.size(); ++ci)
                for (std::size_t v = b.row(cone[ci]).next_set(0); v < n_; v = b.row(cone[ci]).next_set(v + 1))
                    sys.set(v, ci, true);
            BitVec target(n_);
            for (auto v : vars) target.set(v, true);
            const auto sol = solve_affine(sys, target);
            if (!sol) continue;
            if (sol->kernel.size() > 22)
                fail(ErrCode::cap_exceeded, "Qaoa1ConeEvaluator: cone solution space too large to enumerate");

            Term term;
            term.t_weight = std::uint32_t(std::popcount(t_mask));
            term.cone_size = std::uint32_t(cone.size());
            const std::size_t combos = std::size_t(1) << sol->kernel.size();
            for (std::size_t mask = 0; mask < combos; ++mask) {
                BitVec pick = sol->particular;
                for (std::size_t kb = 0; kb < sol->kernel.size(); ++kb)
                    if ((mask >> kb) & 1) pick ^= sol->kernel[kb];
                std::uint32_t count = 0;
                for (std::size_t ci = pick.next_set(0); ci < cone.size(); ci = pick.next_set(ci + 1)) {
                    term.sols.push_back(cone[ci]);
                    ++count;
                }
                term.sol_sizes.push_back(count);
            }
            clause_terms_[a].push_back(std::move(term));
        }
        // Empty clause: Z^{} contributes J_a directly through the T = {} term;
        // represent it as a single empty solution.
        if (ka == 0) {
            Term term;
            term.t_weight = 0;
            term.cone_size = 0;
            term.sol_sizes.push_back(0);
            clause_terms_[a].push_back(std::move(term));
        }
    }
}

double Qaoa1ConeEvaluator::expectation(const BitVec& v, double gamma, double beta) const {
    if (v.len() != m_) fail_invalid("Qaoa1ConeEvaluator: parity length mismatch");
    const Qaoa1Params par(gamma, beta);
    const std::size_t max_pow = 2 * m_ + k_max_ + 2;
    std::vector<double> c_pow(max_pow, 1.0), s_pow(max_pow, 1.0), p_pow(k_max_ + 1, 1.0), q_pow(k_max_ + 1, 1.0);
    for (std::size_t i = 1; i < max_pow; ++i) {
        c_pow[i] = c_pow[i - 1] * par.c;
        s_pow[i] = s_pow[i - 1] * par.s;
    }
    for (std::size_t i = 1; i <= k_max_; ++i) {
        p_pow[i] = p_pow[i - 1] * par.p;
        q_pow[i] = q_pow[i - 1] * par.q;
    }

    long double total = 0.0L;
    for (std::size_t a = 0; a < m_; ++a) {
        long double clause_acc = 0.0L;
        const std::size_t ka = clause_arity_[a];
        for (const auto& term : clause_terms_[a]) {
            const double pq = p_pow[ka - term.t_weight] * q_pow[term.t_weight];
            long double sum = 0.0L;
            std::size_t cursor = 0;
            for (auto sz : term.sol_sizes) {
                double jprod = 1.0;
                for (std::size_t i = 0; i < sz; ++i) jprod *= v.get(term.sols[cursor + i]) ? -1.0 : 1.0;
                cursor += sz;
                const std::uint32_t diff_half = (sz >= term.t_weight ? sz - term.t_weight : term.t_weight - sz) / 2;
                const double sign = (diff_half & 1) ? -1.0 : 1.0;
                sum += sign * s_pow[sz] * c_pow[term.cone_size - sz] * jprod;
            }
            clause_acc += (long double)pq * sum;
        }
        const double ja = v.get(a) ? -1.0 : 1.0;
        total += ja * clause_acc;
    }
    return 0.5 + double(total) / (2.0 * double(m_));
}

Qaoa1ConeEvaluator::MeanResult Qaoa1ConeEvaluator::parity_mean(double gamma, double beta, std::size_t samples,
                                                               Rng& rng) const {
    long double sum = 0.0L, sum2 = 0.0L;
    BitVec v(m_);
    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t i = 0; i < m_; ++i) v.set(i, rng.bit());
        const long double e = expectation(v, gamma, beta);
        sum += e;
        sum2 += e * e;
    }
    MeanResult out;
    out.mean = double(sum / (long double)samples);
    const long double var = sum2 / (long double)samples - (sum / (long double)samples) * (sum / (long double)samples);
    out.stddev = var > 0 ? double(std::sqrt((double)var)) : 0.0;
    return out;
}

} // namespace xorsat
