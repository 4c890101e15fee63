#pragma once

#include "overdet/int_matrix.hpp"

namespace overdet {

// Smith decomposition u * a * v = d with u, v unimodular and d diagonal with
// a nonnegative divisibility chain d1 | d2 | ... . The exact inverses of the
// transforms are tracked alongside; they are cheap to maintain and several
// lattice constructions need them.
struct SmithDecomposition {
    IntMatrix u, d, v;
    IntMatrix u_inv, v_inv;

    // Nonzero diagonal entries, in order.
    IntVec invariant_factors() const;
};

// Deterministic: the pivot is always the smallest-absolute-value nonzero
// entry of the working submatrix, ties broken in row-major order.
SmithDecomposition smith_normal_form(const IntMatrix& a);

}  // namespace overdet
