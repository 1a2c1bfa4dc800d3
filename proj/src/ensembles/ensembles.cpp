#include "xorsat/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace xorsat {

namespace {

std::size_t checked_row_count(std::size_t m, double inv_lambda, const char* who) {
    const double rows = inv_lambda * double(m);
    const double rounded = std::round(rows);
    if (std::fabs(rows - rounded) > 1e-9 || rounded < 0)
        fail_invalid(std::string(who) + ": inv_lambda*m must be a nonnegative integer");
    return std::size_t(rounded);
}

std::vector<std::size_t> shuffled_identity(std::size_t m, Rng& rng) {
    std::vector<std::size_t> p(m);
    std::iota(p.begin(), p.end(), std::size_t(0));
    for (std::size_t i = m; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
    return p;
}

} // namespace

BitMatrix sample_gallager(std::size_t m, std::size_t k, std::size_t d, Rng& rng) {
    if (k < 3) fail_invalid("sample_gallager: k must be at least 3");
    if (d == 0 || m % d != 0) fail_invalid("sample_gallager: d must divide m");
    const std::size_t checks_per_layer = m / d;
    BitMatrix h(k * checks_per_layer, m);
    // Each layer: a uniform permutation of [m] cut into m/d consecutive
    // blocks, one block per check. Layer l occupies rows [l*m/d, (l+1)*m/d).
    for (std::size_t layer = 0; layer < k; ++layer) {
        const auto perm = shuffled_identity(m, rng);
        for (std::size_t r = 0; r < checks_per_layer; ++r) {
            BitVec& row = h.row(layer * checks_per_layer + r);
            for (std::size_t j = 0; j < d; ++j) row.set(perm[r * d + j], true);
        }
    }
    return h;
}

BitMatrix sample_bernoulli(std::size_t m, double inv_lambda, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) fail_invalid("sample_bernoulli: p outside [0,1]");
    const std::size_t rows = checked_row_count(m, inv_lambda, "sample_bernoulli");
    BitMatrix h(rows, m);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < m; ++c)
            if (rng.bernoulli(p)) h.set(r, c, true);
    return h;
}

BitMatrix sample_right_regular(std::size_t m, double inv_lambda, std::size_t d, Rng& rng) {
    if (d > m) fail_invalid("sample_right_regular: d exceeds m");
    const std::size_t rows = checked_row_count(m, inv_lambda, "sample_right_regular");
    BitMatrix h(rows, m);
    std::vector<std::size_t> idx(m);
    for (std::size_t r = 0; r < rows; ++r) {
        std::iota(idx.begin(), idx.end(), std::size_t(0));
        for (std::size_t j = 0; j < d; ++j) {
            std::swap(idx[j], idx[j + rng.below(m - j)]);
            h.set(r, idx[j], true);
        }
    }
    return h;
}

XorSatInstance sample_instance(const BitMatrix& h, Rng& rng, const std::string& ensemble) {
    XorSatInstance inst;
    inst.B = h.transposed();
    inst.v = BitVec(h.cols());
    for (std::size_t i = 0; i < h.cols(); ++i)
        if (rng.bit()) inst.v.set(i, true);
    const auto [wt_b, wt_c] = sparsities(h);
    inst.k = int(wt_b);
    bool col_regular = true;
    for (std::size_t r = 0; r < h.rows() && col_regular; ++r) col_regular = h.row_weight(r) == wt_c;
    inst.d = col_regular ? int(wt_c) : 0;
    inst.seed = rng.seed();
    inst.ensemble = ensemble;
    return inst;
}

CorrelatedFamily correlate(const XorSatInstance& inst, double kappa, std::size_t r_count, Rng& rng) {
    if (kappa < 0.0 || kappa > 1.0) fail_invalid("correlate: kappa outside [0,1]");
    if (r_count < 2) fail_invalid("correlate: need at least two replicas");
    const std::size_t m = inst.m();
    const std::size_t p = std::size_t(std::floor(kappa * double(m)));
    CorrelatedFamily fam;
    fam.B = inst.B;
    fam.kappa = kappa;
    fam.parities.reserve(r_count);
    fam.parities.push_back(inst.v);
    for (std::size_t r = 1; r < r_count; ++r) {
        BitVec vr = inst.v;
        for (std::size_t i = 0; i < p; ++i) vr.set(i, rng.bit());
        fam.parities.push_back(std::move(vr));
    }
    return fam;
}

InterpolationPath interpolation_path(const BitMatrix& b, std::size_t t_count, std::size_t q_count, Rng& rng) {
    if (t_count < 1 || q_count < 1) fail_invalid("interpolation_path: T and Q must be positive");
    const std::size_t m = b.rows();
    auto fresh = [&] {
        BitVec v(m);
        for (std::size_t i = 0; i < m; ++i)
            if (rng.bit()) v.set(i, true);
        return v;
    };
    const BitVec v0 = fresh();
    InterpolationPath path;
    path.B = b;
    path.T = t_count;
    path.Q = q_count;
    path.grid.resize(t_count);
    for (std::size_t t = 0; t < t_count; ++t) {
        const BitVec vt = fresh();
        path.grid[t].reserve(q_count + 1);
        for (std::size_t q = 0; q <= q_count; ++q) {
            const std::size_t p = (q * m) / q_count;
            BitVec vq = v0;
            for (std::size_t i = 0; i < p; ++i) vq.set(i, vt.get(i));
            path.grid[t].push_back(std::move(vq));
        }
    }
    return path;
}

BitMatrix restrict_rows(const BitMatrix& h, const std::vector<std::size_t>& rows) {
    BitMatrix out(rows.size(), h.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= h.rows()) fail_invalid("restrict_rows: row index out of range");
        out.row(i) = h.row(rows[i]);
    }
    return out;
}

std::pair<std::size_t, std::size_t> sparsities(const BitMatrix& h) {
    std::size_t wt_b = 0;
    for (std::size_t c = 0; c < h.cols(); ++c) wt_b = std::max(wt_b, h.col_weight(c));
    std::size_t wt_c = 0;
    for (std::size_t r = 0; r < h.rows(); ++r) wt_c = std::max(wt_c, h.row_weight(r));
    return {wt_b, wt_c};
}

CodeReport restrictability_probe(const BitMatrix& h, double epsilon, std::size_t w_max) {
    const double sel = epsilon * double(h.rows());
    const double rounded = std::round(sel);
    if (std::fabs(sel - rounded) > 1e-9 || rounded < 0)
        fail_invalid("restrictability_probe: epsilon*rows must be integral");
    CodeReport report;
    report.rows_used = std::size_t(rounded);
    report.w_max = w_max;
    std::vector<std::size_t> first(report.rows_used);
    std::iota(first.begin(), first.end(), std::size_t(0));
    report.restricted_distance = code_distance_exact(restrict_rows(h, first), w_max);
    return report;
}

BitMatrix sample_girth4_biregular(std::size_t n, std::size_t k, std::size_t d, Rng& rng) {
    if (k == 0 || d == 0 || (n * d) % k != 0) fail_invalid("sample_girth4_biregular: need k | n*d");
    const std::size_t m = n * d / k;
    if (k > n) fail_invalid("sample_girth4_biregular: clause arity exceeds variable count");
    if (m * k * (k - 1) > n * (n - 1))
        fail_invalid("sample_girth4_biregular: pair budget exceeded, no girth>4 graph this dense");

    // Stub matching, then degree-preserving swaps that never increase the
    // conflict energy: duplicated variables inside a clause and repeated
    // variable pairs across clauses.
    auto pair_key = [n](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return std::uint64_t(a) * n + b;
    };

    for (int attempt = 0; attempt < 64; ++attempt) {
        Rng local = rng.split(0xb19e9u ^ std::uint64_t(attempt));
        std::vector<std::uint32_t> slot(m * k);
        {
            std::size_t s = 0;
            for (std::size_t v = 0; v < n; ++v)
                for (std::size_t j = 0; j < d; ++j) slot[s++] = std::uint32_t(v);
            for (std::size_t i = slot.size(); i > 1; --i) std::swap(slot[i - 1], slot[local.below(i)]);
        }

        std::unordered_map<std::uint64_t, int> pair_mult;
        long long energy = 0;
        auto clause_delta = [&](std::size_t c, int sign) {
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b2 = a + 1; b2 < k; ++b2) {
                    const std::uint32_t u = slot[c * k + a], w = slot[c * k + b2];
                    if (u == w) {
                        energy += 16 * sign; // in-clause duplicate, heavily penalized
                        continue;
                    }
                    int& mult = pair_mult[pair_key(u, w)];
                    if (sign > 0) {
                        energy += mult; // each prior copy of this pair is one conflict
                        ++mult;
                    } else {
                        --mult;
                        energy -= mult;
                    }
                }
        };
        for (std::size_t c = 0; c < m; ++c) clause_delta(c, +1);

        const std::size_t max_steps = 400000;
        for (std::size_t step = 0; step < max_steps && energy > 0; ++step) {
            const std::size_t s1 = local.below(m * k);
            const std::size_t s2 = local.below(m * k);
            const std::size_t c1 = s1 / k, c2 = s2 / k;
            if (c1 == c2 || slot[s1] == slot[s2]) continue;
            const long long before = energy;
            clause_delta(c1, -1);
            clause_delta(c2, -1);
            std::swap(slot[s1], slot[s2]);
            clause_delta(c1, +1);
            clause_delta(c2, +1);
            const bool keep = energy < before || (energy == before && local.bit());
            if (!keep) {
                clause_delta(c1, -1);
                clause_delta(c2, -1);
                std::swap(slot[s1], slot[s2]);
                clause_delta(c1, +1);
                clause_delta(c2, +1);
            }
        }
        if (energy == 0) {
            BitMatrix b(m, n);
            for (std::size_t c = 0; c < m; ++c)
                for (std::size_t a = 0; a < k; ++a) b.set(c, slot[c * k + a], true);
            return b;
        }
    }
    fail(ErrCode::numeric, "sample_girth4_biregular: repair search did not converge; increase n");
}

} // namespace xorsat
