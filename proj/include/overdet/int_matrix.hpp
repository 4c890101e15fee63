#pragma once

#include <cstddef>
#include <vector>

#include "overdet/numeric.hpp"

namespace overdet {

// Dense integer matrix, row-major, exact entries.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVec row(std::size_t r) const;
    void set_row(std::size_t r, const IntVec& v);

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row i += c * row j
    void add_row(std::size_t i, std::size_t j, const Int& c);
    // col i += c * col j
    void add_col(std::size_t i, std::size_t j, const Int& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    bool operator==(const IntMatrix& o) const = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

IntMatrix transpose(const IntMatrix& a);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

IntVec mul_mat_vec(const IntMatrix& a, const IntVec& v);
IntVec mul_vec_mat(const IntVec& v, const IntMatrix& a);

// Exact determinant (Bareiss fraction-free elimination). Square input only.
Int determinant(const IntMatrix& a);

// Rank over the rationals.
std::size_t rank(const IntMatrix& a);

// Row-style Hermite normal form. Pivot columns strictly increase, pivots are
// positive, entries above each pivot are reduced into [0, pivot). Zero rows
// are dropped, so the result has full row rank and is the canonical
// representative of the row lattice.
IntMatrix hermite_normal_form(const IntMatrix& a);

// Incremental exact row-echelon basis over the rationals (fraction-free).
// Used for rank bookkeeping during subset enumeration; supports push/pop.
class EchelonBasis {
  public:
    // Returns true if v was independent of the current span (rank grew).
    bool push(IntVec v);
    void pop();  // undo the most recent rank-growing push
    std::size_t rank() const { return rows_.size(); }
    bool reduces_to_zero(IntVec v) const;

  private:
    std::vector<IntVec> rows_;        // echelon rows, pivot columns increasing insert order
    std::vector<std::size_t> pivots_; // pivot column of each row
};

}  // namespace overdet
