#include "xorsat/bitmatrix.hpp"

#include <utility>

namespace xorsat {

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    BitMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) fail_invalid("BitMatrix::from_rows: ragged rows");
        std::size_t j = 0;
        for (int b : row) m.set(i, j++, b != 0);
        ++i;
    }
    return m;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const BitVec& v = row_[r];
        for (std::size_t c = v.next_set(0); c < cols_; c = v.next_set(c + 1)) t.set(c, r, true);
    }
    return t;
}

std::size_t BitMatrix::col_weight(std::size_t c) const {
    std::size_t w = 0;
    for (std::size_t r = 0; r < rows_; ++r) w += row_[r].get(c);
    return w;
}

BitVec mat_vec_mul(const BitMatrix& m, const BitVec& x) {
    if (x.len() != m.cols()) fail_invalid("mat_vec_mul: dimension mismatch");
    BitVec out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (m.row(r).dot(x)) out.set(r, true);
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns in order.
std::vector<std::size_t> rref(std::vector<BitVec>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rows[i].get(c)) {
                sel = i;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(const BitMatrix& m) {
    std::vector<BitVec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return rref(rows, m.cols()).size();
}

std::vector<BitVec> kernel_basis(const BitMatrix& m) {
    std::vector<BitVec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    const auto pivots = rref(rows, m.cols());

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<BitVec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVec c(m.cols());
        c.set(f, true);
        for (std::size_t p = 0; p < pivots.size(); ++p)
            if (rows[p].get(f)) c.set(pivots[p], true);
        basis.push_back(std::move(c));
    }
    return basis;
}

std::optional<std::size_t> code_distance_exact(const BitMatrix& h, std::size_t w_max) {
    const std::size_t m = h.cols();
    if (w_max > m) fail_invalid("code_distance_exact: w_max exceeds column count");
    const BitMatrix ht = h.transposed(); // row i of ht = column i of h
    const BitVec zero(h.rows());

    // Depth-first support enumeration at fixed weight, ascending weight.
    std::vector<std::size_t> idx;
    BitVec acc(h.rows());
    for (std::size_t w = 1; w <= w_max; ++w) {
        bool found = false;
        auto rec = [&](auto&& self, std::size_t start, std::size_t left) -> void {
            if (found) return;
            if (left == 0) {
                if (acc == zero) found = true;
                return;
            }
            for (std::size_t i = start; i + left <= m; ++i) {
                acc ^= ht.row(i);
                self(self, i + 1, left - 1);
                acc ^= ht.row(i);
                if (found) return;
            }
        };
        rec(rec, 0, w);
        if (found) return w;
    }
    return std::nullopt;
}

std::optional<AffineSolution> solve_affine(const BitMatrix& m, const BitVec& t) {
    if (t.len() != m.rows()) fail_invalid("solve_affine: dimension mismatch");
    // Augmented column appended at index cols.
    std::vector<BitVec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BitVec v(m.cols() + 1);
        for (std::size_t c = m.row(r).next_set(0); c < m.cols(); c = m.row(r).next_set(c + 1)) v.set(c, true);
        v.set(m.cols(), t.get(r));
        rows.push_back(std::move(v));
    }
    const auto pivots = rref(rows, m.cols() + 1);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;

    AffineSolution sol;
    sol.particular = BitVec(m.cols());
    for (std::size_t p = 0; p < pivots.size(); ++p)
        if (rows[p].get(m.cols())) sol.particular.set(pivots[p], true);

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVec c(m.cols());
        c.set(f, true);
        for (std::size_t p = 0; p < pivots.size(); ++p)
            if (rows[p].get(f)) c.set(pivots[p], true);
        sol.kernel.push_back(std::move(c));
    }
    return sol;
}

} // namespace xorsat
