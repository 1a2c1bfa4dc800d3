#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "xorsat/bitvec.hpp"

namespace xorsat {

// Dense row-major matrix over F2; each row is a BitVec.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), row_(rows, BitVec(cols)) {}

    static BitMatrix identity(std::size_t n);
    // Rows given as 0/1 initializer lists; used heavily in tests.
    static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return row_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool b) { row_[r].set(c, b); }

    const BitVec& row(std::size_t r) const { return row_[r]; }
    BitVec& row(std::size_t r) { return row_[r]; }

    BitMatrix transposed() const;

    std::size_t row_weight(std::size_t r) const { return row_[r].weight(); }
    std::size_t col_weight(std::size_t c) const;

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_ == b.row_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVec> row_;
};

// result[i] = XOR_j M[i][j] x[j]. Dimension mismatch is an error.
BitVec mat_vec_mul(const BitMatrix& m, const BitVec& x);

std::size_t rank(const BitMatrix& m);

// Independent vectors spanning ker(M) = {c : Mc = 0}; size = cols - rank.
std::vector<BitVec> kernel_basis(const BitMatrix& m);

// Minimum weight of a nonzero kernel vector if it is <= w_max, otherwise
// nullopt ("distance > w_max"). Enumerates candidate supports in ascending
// weight with early exit.
std::optional<std::size_t> code_distance_exact(const BitMatrix& h, std::size_t w_max);

// Particular solution of M s = t together with a kernel basis, or nullopt if
// the system is inconsistent.
struct AffineSolution {
    BitVec particular;
    std::vector<BitVec> kernel;
};
std::optional<AffineSolution> solve_affine(const BitMatrix& m, const BitVec& t);

} // namespace xorsat
