#include "overdet/smith.hpp"

#include <algorithm>

#include "overdet/errors.hpp"

namespace overdet {

IntVec SmithDecomposition::invariant_factors() const {
    IntVec out;
    const std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < n; ++i) {
        if (d(i, i) != 0) out.push_back(d(i, i));
    }
    return out;
}

namespace {

struct Work {
    IntMatrix d, u, v, u_inv, v_inv;

    void row_swap(std::size_t i, std::size_t j) {
        d.swap_rows(i, j);
        u.swap_rows(i, j);
        u_inv.swap_cols(i, j);
    }
    void col_swap(std::size_t i, std::size_t j) {
        d.swap_cols(i, j);
        v.swap_cols(i, j);
        v_inv.swap_rows(i, j);
    }
    // row i += c * row j
    void row_add(std::size_t i, std::size_t j, const Int& c) {
        d.add_row(i, j, c);
        u.add_row(i, j, c);
        u_inv.add_col(j, i, -c);
    }
    // col i += c * col j
    void col_add(std::size_t i, std::size_t j, const Int& c) {
        d.add_col(i, j, c);
        v.add_col(i, j, c);
        v_inv.add_row(j, i, -c);
    }
    void row_negate(std::size_t i) {
        d.negate_row(i);
        u.negate_row(i);
        u_inv.negate_col(i);
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    Work w{a, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(m),
           IntMatrix::identity(n)};

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest-absolute-value nonzero pivot in the trailing submatrix.
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (w.d(i, j) == 0) continue;
                    if (pi == m || abs(w.d(i, j)) < abs(w.d(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == m) {
                t = steps;  // trailing submatrix is zero, done
                break;
            }
            w.row_swap(t, pi);
            w.col_swap(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (w.d(i, t) != 0) {
                    Int q = w.d(i, t) / w.d(t, t);
                    w.row_add(i, t, -q);
                    if (w.d(i, t) != 0) clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.d(t, j) != 0) {
                    Int q = w.d(t, j) / w.d(t, t);
                    w.col_add(j, t, -q);
                    if (w.d(t, j) != 0) clean = false;
                }
            }
            if (!clean) continue;

            // Pivot divides every remaining entry, or pull a bad row up and retry.
            std::size_t bi = m;
            for (std::size_t i = t + 1; i < m && bi == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (w.d(i, j) % w.d(t, t) != 0) {
                        bi = i;
                        break;
                    }
                }
            if (bi != m) {
                w.row_add(t, bi, 1);
                continue;
            }
            if (w.d(t, t) < 0) w.row_negate(t);
            break;
        }
        if (t == steps) break;
    }

    SmithDecomposition out{std::move(w.u), std::move(w.d), std::move(w.v), std::move(w.u_inv),
                           std::move(w.v_inv)};
    if (!(out.u * a * out.v == out.d)) throw InternalError("smith_normal_form: U*A*V != D");
    return out;
}

}  // namespace overdet
