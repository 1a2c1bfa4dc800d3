#include "xorsat/decode.hpp"

#include <cstdlib>
#include <string>

namespace xorsat {

namespace {

std::uint64_t table_entries(std::size_t m, std::size_t ell) {
    // sum_{w<=ell} C(m,w), saturating well above the cap.
    long double total = 0;
    long double c = 1;
    for (std::size_t w = 0; w <= ell; ++w) {
        total += c;
        if (total > 4e18L) return ~std::uint64_t(0);
        c = c * (long double)(m - w) / (long double)(w + 1);
    }
    return (std::uint64_t)total;
}

} // namespace

const Caps& Caps::get() {
    static const Caps caps = [] {
        Caps c;
        if (const char* env = std::getenv("XORSAT_CAP_MB")) {
            const std::uint64_t mb = std::strtoull(env, nullptr, 10);
            if (mb > 0) {
                const std::uint64_t bytes = mb << 20;
                // ~48 bytes per decode-table entry, 8 per pair tally slot.
                c.decode_table_entries = std::min<std::uint64_t>(c.decode_table_entries, bytes / 48);
                c.histogram_pair_products = std::min<std::uint64_t>(c.histogram_pair_products, bytes);
                c.state_bytes = std::min<std::uint64_t>(c.state_bytes, bytes);
            }
        }
        return c;
    }();
    return caps;
}

DecodeTable build_decode_table(const BitMatrix& h, std::size_t ell) {
    const std::size_t m = h.cols();
    if (ell > m) fail_invalid("build_decode_table: ell exceeds code length");
    const std::uint64_t entries = table_entries(m, ell);
    if (entries > Caps::get().decode_table_entries)
        fail(ErrCode::cap_exceeded, "build_decode_table: table would hold " + std::to_string(entries) +
                                        " entries, cap is " + std::to_string(Caps::get().decode_table_entries));

    const BitMatrix ht = h.transposed();
    DecodeTable t;
    t.ell_ = ell;
    t.n_checks_ = h.rows();
    t.entries_.reserve(entries);

    BitVec err(m);
    BitVec syn(h.rows());
    auto insert = [&]() {
        auto [it, fresh] = t.entries_.try_emplace(syn, err);
        if (!fresh) throw SyndromeCollision(it->second, err);
    };
    // All supports of weight <= ell, syndrome maintained incrementally. Each
    // recursion node corresponds to one distinct support.
    auto rec = [&](auto&& self, std::size_t start, std::size_t left) -> void {
        insert();
        if (left == 0) return;
        for (std::size_t i = start; i < m; ++i) {
            err.set(i, true);
            syn ^= ht.row(i);
            self(self, i + 1, left - 1);
            err.set(i, false);
            syn ^= ht.row(i);
        }
    };
    rec(rec, 0, ell);
    return t;
}

const BitVec& DecodeTable::decode(const BitVec& s) const {
    if (s.len() != n_checks_) fail_invalid("decode: syndrome length mismatch");
    const auto it = entries_.find(s);
    if (it == entries_.end()) throw UnknownSyndrome(s);
    return it->second;
}

} // namespace xorsat
