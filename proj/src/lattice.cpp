#include "overdet/lattice.hpp"

#include "overdet/errors.hpp"

namespace overdet {

SublatticeBasis lattice_span(const IntMatrix& generators, std::size_t ambient_dim) {
    if (generators.cols() != ambient_dim && generators.rows() != 0)
        throw PreconditionError("lattice_span: generator width differs from ambient dimension");
    IntMatrix g = generators;
    if (g.rows() == 0) g = IntMatrix(0, ambient_dim);
    return SublatticeBasis{ambient_dim, hermite_normal_form(g)};
}

SublatticeBasis saturate(const SublatticeBasis& g) {
    const std::size_t r = g.rank();
    if (r == 0) return g;
    SmithDecomposition s = smith_normal_form(g.basis);
    // basis = U^-1 [D|0] V^-1, so the first r rows of V^-1 span the same real
    // subspace with a basis extendable to Z^n: their Z-span is the saturation.
    IntMatrix rows(r, g.ambient_dim);
    for (std::size_t i = 0; i < r; ++i) {
        if (s.d(i, i) == 0) throw PreconditionError("saturate: basis rows are dependent");
        for (std::size_t j = 0; j < g.ambient_dim; ++j) rows(i, j) = s.v_inv(i, j);
    }
    return lattice_span(rows, g.ambient_dim);
}

bool is_saturated(const SublatticeBasis& g) { return saturate(g) == g; }

Int sublattice_index(const SublatticeBasis& g, const SublatticeBasis& l) {
    if (g.ambient_dim != l.ambient_dim)
        throw PreconditionError("sublattice_index: ambient dimensions differ");
    if (g.rank() != l.rank())
        throw PreconditionError("sublattice_index: ranks differ");
    const std::size_t r = l.rank();
    if (r == 0) return 1;

    SmithDecomposition s = smith_normal_form(l.basis);
    // Solve x * basis(l) = row for each row of basis(g); integrality of the
    // solution is exactly containment of g in l.
    IntMatrix x(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        IntVec y = mul_vec_mat(g.basis.row(i), s.v);
        for (std::size_t j = r; j < l.ambient_dim; ++j) {
            if (y[j] != 0)
                throw PreconditionError("sublattice_index: lattices span different subspaces");
        }
        IntVec z(r);
        for (std::size_t j = 0; j < r; ++j) {
            if (y[j] % s.d(j, j) != 0)
                throw PreconditionError("sublattice_index: first lattice is not a sublattice");
            z[j] = y[j] / s.d(j, j);
        }
        x.set_row(i, mul_vec_mat(z, s.u));
    }

    SmithDecomposition sx = smith_normal_form(x);
    Int index = 1;
    for (std::size_t i = 0; i < r; ++i) {
        if (sx.d(i, i) == 0)
            throw PreconditionError("sublattice_index: change of basis is singular");
        index *= sx.d(i, i);
    }
    return index;
}

QuotientProjection quotient_projection(const SublatticeBasis& lambda) {
    if (!is_saturated(lambda))
        throw PreconditionError(
            "quotient_projection: input is not saturated; call saturate() first");
    const std::size_t n = lambda.ambient_dim;
    const std::size_t r = lambda.rank();

    IntMatrix p(n - r, n);
    if (r == 0) {
        p = IntMatrix::identity(n);
    } else {
        SmithDecomposition s = smith_normal_form(lambda.basis);
        // Coordinates in the adapted basis are x * V; dropping the first r of
        // them kills exactly the lattice. P = (last n-r columns of V)^T.
        for (std::size_t i = 0; i < n - r; ++i)
            for (std::size_t j = 0; j < n; ++j) p(i, j) = s.v(j, r + i);
    }
    p = hermite_normal_form(p);
    if (p.rows() != n - r) throw InternalError("quotient_projection: rank drop in complement");
    return QuotientProjection{n, r, std::move(p)};
}

IntVec apply_projection(const QuotientProjection& p, const IntVec& point) {
    if (point.size() != p.ambient_dim)
        throw PreconditionError("apply_projection: point has wrong dimension");
    return mul_mat_vec(p.matrix, point);
}

SaturatedCoordinates::SaturatedCoordinates(const SublatticeBasis& saturated)
    : basis_(saturated), snf_(smith_normal_form(saturated.basis)) {
    for (std::size_t i = 0; i < basis_.rank(); ++i) {
        if (snf_.d(i, i) != 1)
            throw PreconditionError("SaturatedCoordinates: basis is not saturated");
    }
}

IntVec SaturatedCoordinates::coords(const IntVec& point) const {
    const std::size_t r = basis_.rank();
    IntVec y = mul_vec_mat(point, snf_.v);
    for (std::size_t j = r; j < basis_.ambient_dim; ++j) {
        if (y[j] != 0) throw PreconditionError("SaturatedCoordinates: point outside span");
    }
    IntVec z(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(r));
    return mul_vec_mat(z, snf_.u);
}

IntVec SaturatedCoordinates::lift_functional(const IntVec& g) const {
    const std::size_t r = basis_.rank();
    const std::size_t n = basis_.ambient_dim;
    // basis = U^-1 [I|0] V^-1, so g_hat = V * (U g ; 0) satisfies basis*g_hat = g.
    IntVec ug = mul_mat_vec(snf_.u, g);
    IntVec padded(n, Int(0));
    for (std::size_t i = 0; i < r; ++i) padded[i] = ug[i];
    return mul_mat_vec(snf_.v, padded);
}

}  // namespace overdet
