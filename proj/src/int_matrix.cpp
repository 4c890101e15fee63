#include "overdet/int_matrix.hpp"

#include <algorithm>

#include "overdet/errors.hpp"

namespace overdet {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InternalError("from_rows: ragged row");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntVec IntMatrix::row(std::size_t r) const {
    IntVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(r, j);
    return v;
}

void IntMatrix::set_row(std::size_t r, const IntVec& v) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = v[j];
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const Int& c) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const Int& c) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMatrix::negate_col(std::size_t i) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) = -(*this)(k, i);
}

IntMatrix transpose(const IntMatrix& a) {
    IntMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw InternalError("matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

IntVec mul_mat_vec(const IntMatrix& a, const IntVec& v) {
    if (a.cols() != v.size()) throw InternalError("matvec shape mismatch");
    IntVec out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

IntVec mul_vec_mat(const IntVec& v, const IntMatrix& a) {
    if (a.rows() != v.size()) throw InternalError("vecmat shape mismatch");
    IntVec out(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        Int s = 0;
        for (std::size_t i = 0; i < a.rows(); ++i) s += v[i] * a(i, j);
        out[j] = s;
    }
    return out;
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw PreconditionError("determinant requires a square matrix");
    std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = t / prev;  // Bareiss: division is exact
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

std::size_t rank(const IntMatrix& a) {
    EchelonBasis basis;
    std::size_t r = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (basis.push(a.row(i))) ++r;
    }
    return r;
}

namespace {

// Floor division; remainder lands in [0, b) for b > 0.
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& a) {
    IntMatrix m = a;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        // Euclid over the rows at/below r until a single nonzero entry remains.
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (m(i, col) == 0) continue;
                if (best == rows || abs(m(i, col)) < abs(m(best, col))) best = i;
            }
            if (best == rows) break;  // column clear below r
            m.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (m(i, col) != 0) {
                    Int q = m(i, col) / m(r, col);
                    m.add_row(i, r, -q);
                    if (m(i, col) != 0) clean = false;
                }
            }
            if (clean) break;
        }
        if (m(r, col) == 0) continue;
        if (m(r, col) < 0) m.negate_row(r);
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(m(i, col), m(r, col));
            if (q != 0) m.add_row(i, r, -q);
        }
        ++r;
    }
    IntMatrix out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(i, j);
    return out;
}

bool EchelonBasis::push(IntVec v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (v[p] == 0) continue;
        const Int a = rows_[i][p];
        const Int b = v[p];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = a * v[j] - b * rows_[i][j];
        Int g = content(v);
        if (g > 1) {
            for (Int& x : v) x /= g;
        }
    }
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) return false;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

void EchelonBasis::pop() {
    rows_.pop_back();
    pivots_.pop_back();
}

bool EchelonBasis::reduces_to_zero(IntVec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (v[p] == 0) continue;
        const Int a = rows_[i][p];
        const Int b = v[p];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = a * v[j] - b * rows_[i][j];
    }
    return is_zero_vec(v);
}

}  // namespace overdet
