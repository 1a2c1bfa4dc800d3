#include "xorsat/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace xorsat {

void OverlapHistogram::merge(const OverlapHistogram& o) {
    if (o.n != n || o.k != k) fail_invalid("OverlapHistogram::merge: shape mismatch");
    trials += o.trials;
    pairs += o.pairs;
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
}

OverlapHistogram overlap_histogram(const SolutionSet& s1, const SolutionSet& s2, std::size_t k, double mu) {
    if (s1.n != s2.n) fail_invalid("overlap_histogram: mismatched n");
    if (k == 0 || s1.n % k != 0) fail_invalid("overlap_histogram: k must divide n");
    const std::uint64_t pairs = std::uint64_t(s1.members.size()) * std::uint64_t(s2.members.size());
    if (pairs > Caps::get().histogram_pair_products)
        fail(ErrCode::cap_exceeded, "overlap_histogram: |S1|*|S2| exceeds the pair cap");

    OverlapHistogram h;
    h.n = s1.n;
    h.k = k;
    h.mu = mu;
    h.counts.assign(s1.n + 1, 0);
    h.pairs = pairs;
    for (const auto z1 : s1.members)
        for (const auto z2 : s2.members) ++h.counts[2 * dk_semimetric_packed(z1, z2, s1.n, k)];
    return h;
}

std::optional<bool> tuple_exists(const std::vector<SolutionSet>& sets, std::size_t k, std::size_t dk_limit,
                                 std::size_t node_budget) {
    if (sets.empty()) return true;
    const std::size_t n = sets[0].n;
    for (const auto& s : sets) {
        if (s.n != n) fail_invalid("tuple_exists: mismatched n");
        if (s.members.empty()) return false;
    }
    // Shortcut: a common member forms a valid tuple at distance zero.
    {
        std::unordered_set<std::uint32_t> common(sets[0].members.begin(), sets[0].members.end());
        for (std::size_t r = 1; r < sets.size() && !common.empty(); ++r) {
            std::unordered_set<std::uint32_t> next;
            for (auto z : sets[r].members)
                if (common.count(z)) next.insert(z);
            common.swap(next);
        }
        if (!common.empty()) return true;
    }

    // Exact DFS over replicas ordered by set size, with a global node budget.
    std::vector<std::size_t> order(sets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return sets[a].members.size() < sets[b].members.size(); });

    std::size_t nodes = 0;
    std::vector<std::uint32_t> chosen;
    bool exhausted = false;
    auto rec = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == order.size()) return true;
        for (const auto z : sets[order[depth]].members) {
            if (++nodes > node_budget) {
                exhausted = true;
                return false;
            }
            bool ok = true;
            for (const auto prev : chosen)
                if (dk_semimetric_packed(prev, z, n, k) > dk_limit) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(z);
            if (self(self, depth + 1)) return true;
            chosen.pop_back();
            if (exhausted) return false;
        }
        return false;
    };
    const bool found = rec(rec, 0);
    if (found) return true;
    if (exhausted) return std::nullopt;
    return false;
}

ProbeResult chaos_probe(const BitMatrix& b, std::size_t r_count, double mu, double nu2, std::size_t trials,
                        std::size_t k, Rng& rng) {
    const std::size_t n = b.cols();
    if (n > 22) fail_invalid("chaos_probe: n exceeds the 22-variable cap");
    const std::size_t dk_limit = std::size_t(std::floor(nu2 * double(n)));
    ProbeResult res;
    res.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng trial_rng = rng.split(t);
        std::vector<SolutionSet> sets;
        sets.reserve(r_count);
        bool empty = false;
        for (std::size_t r = 0; r < r_count; ++r) {
            XorSatInstance inst;
            inst.B = b;
            inst.v = BitVec(b.rows());
            for (std::size_t i = 0; i < b.rows(); ++i)
                if (trial_rng.bit()) inst.v.set(i, true);
            sets.push_back(enumerate_solutions(inst, mu));
            if (sets.back().members.empty()) empty = true;
        }
        if (empty) {
            ++res.no;
            continue;
        }
        const auto outcome = tuple_exists(sets, k, dk_limit);
        if (!outcome)
            ++res.unknown;
        else if (*outcome)
            ++res.yes;
        else
            ++res.no;
    }
    return res;
}

ProbeResult ogp_probe(double kappa, double mu, double nu1, double nu2, std::size_t trials,
                      const GallagerParams& params, Rng& rng) {
    ProbeResult res;
    res.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng trial_rng = rng.split(t);
        const BitMatrix h = sample_gallager(params.m, params.k, params.d, trial_rng);
        XorSatInstance inst = sample_instance(h, trial_rng, "gallager");
        if (inst.n() > 22) fail_invalid("ogp_probe: n exceeds the 22-variable cap");
        const CorrelatedFamily fam = correlate(inst, kappa, 2, trial_rng);

        const std::size_t n = inst.n();
        XorSatInstance second = inst;
        second.v = fam.parities[1];
        const SolutionSet s1 = enumerate_solutions(inst, mu);
        const SolutionSet s2 = enumerate_solutions(second, mu);

        const std::uint64_t prods = std::uint64_t(s1.members.size()) * std::uint64_t(s2.members.size());
        if (prods > Caps::get().histogram_pair_products)
            fail(ErrCode::cap_exceeded, "ogp_probe: solution-pair cap exceeded");

        bool found = false;
        for (const auto z1 : s1.members) {
            for (const auto z2 : s2.members) {
                const double frac = double(dk_semimetric_packed(z1, z2, n, params.k)) / double(n);
                if (frac >= nu1 && frac <= nu2) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        found ? ++res.yes : ++res.no;
    }
    return res;
}

std::vector<InterpTrace> interpolation_overlap_sweep(const BitMatrix& b, std::size_t t_count, std::size_t q_count,
                                                     double mu, std::size_t k, Rng& rng) {
    const std::size_t n = b.cols();
    if (n > 22) fail_invalid("interpolation_overlap_sweep: n exceeds the 22-variable cap");
    const InterpolationPath path = interpolation_path(b, t_count, q_count, rng);

    std::vector<std::vector<SolutionSet>> sets(t_count);
    for (std::size_t t = 0; t < t_count; ++t) {
        sets[t].reserve(q_count + 1);
        for (std::size_t q = 0; q <= q_count; ++q) {
            XorSatInstance inst;
            inst.B = b;
            inst.v = path.grid[t][q];
            sets[t].push_back(enumerate_solutions(inst, mu));
        }
    }

    std::vector<InterpTrace> traces;
    for (std::size_t q = 0; q <= q_count; ++q) {
        for (std::size_t t1 = 0; t1 < t_count; ++t1) {
            for (std::size_t t2 = t1 + 1; t2 < t_count; ++t2) {
                InterpTrace tr;
                tr.q = q;
                tr.t1 = t1;
                tr.t2 = t2;
                const auto& s1 = sets[t1][q];
                const auto& s2 = sets[t2][q];
                if (!s1.members.empty() && !s2.members.empty()) {
                    const std::uint64_t prods = std::uint64_t(s1.members.size()) * std::uint64_t(s2.members.size());
                    if (prods > Caps::get().histogram_pair_products)
                        fail(ErrCode::cap_exceeded, "interpolation_overlap_sweep: pair cap exceeded");
                    std::size_t best = n;
                    for (const auto z1 : s1.members)
                        for (const auto z2 : s2.members) best = std::min(best, dk_semimetric_packed(z1, z2, n, k));
                    tr.min_overlap = double(best) / double(n);
                }
                traces.push_back(tr);
            }
        }
    }
    return traces;
}

ConcentrationResult concentration_probe(const BitMatrix& b, std::size_t samples, Rng& rng, int threads) {
    if (b.cols() > 24) fail_invalid("concentration_probe: n exceeds the 24-variable cap");
    ConcentrationResult out;
    out.samples = samples;
    long double sum = 0.0L, sum2 = 0.0L;
    for (std::size_t s = 0; s < samples; ++s) {
        Rng trial_rng = rng.split(s);
        XorSatInstance inst;
        inst.B = b;
        inst.v = BitVec(b.rows());
        for (std::size_t i = 0; i < b.rows(); ++i)
            if (trial_rng.bit()) inst.v.set(i, true);
        const double frac = double(brute_force_max(inst, threads).g_star) / double(inst.m());
        sum += frac;
        sum2 += frac * frac;
    }
    out.mean = double(sum / (long double)samples);
    const long double var = sum2 / (long double)samples - (sum / (long double)samples) * (sum / (long double)samples);
    out.stddev = var > 0 ? std::sqrt(double(var)) : 0.0;
    return out;
}

} // namespace xorsat
