#pragma once

#include "overdet/int_matrix.hpp"
#include "overdet/smith.hpp"

namespace overdet {

// A full-row-rank basis of a sublattice of Z^n, kept in Hermite normal form
// so that lattice equality is a structural comparison.
struct SublatticeBasis {
    std::size_t ambient_dim = 0;
    IntMatrix basis;  // rank x ambient_dim, canonical HNF

    std::size_t rank() const { return basis.rows(); }
    bool operator==(const SublatticeBasis& o) const = default;
};

// Canonical basis of the lattice generated by the rows of `generators`.
SublatticeBasis lattice_span(const IntMatrix& generators, std::size_t ambient_dim);

// Basis of span_R(g) intersected with Z^n. Idempotent; preserves rank.
SublatticeBasis saturate(const SublatticeBasis& g);

bool is_saturated(const SublatticeBasis& g);

// Index [l : g] of g inside l. Requires rank(g) == rank(l) and g contained in
// l; throws PreconditionError otherwise. Computed as the product of the
// invariant factors of the change-of-basis matrix.
Int sublattice_index(const SublatticeBasis& g, const SublatticeBasis& l);

// Surjection Z^n -> Z^(n-r) whose kernel is exactly the stored saturated
// sublattice. The matrix is canonicalized (HNF of the SNF-adapted complement:
// unit pivots, reduced rows) so projected point sets are reproducible.
struct QuotientProjection {
    std::size_t ambient_dim = 0;
    std::size_t codim_rank = 0;  // rank of the killed sublattice
    IntMatrix matrix;            // (ambient_dim - codim_rank) x ambient_dim

    std::size_t quotient_dim() const { return ambient_dim - codim_rank; }
};

// Requires a saturated input (the quotient must be torsion-free).
QuotientProjection quotient_projection(const SublatticeBasis& lambda);

IntVec apply_projection(const QuotientProjection& p, const IntVec& point);

// Integer coordinates of lattice points relative to a saturated basis:
// solves c * basis = point exactly. Throws if the point is outside the span.
class SaturatedCoordinates {
  public:
    explicit SaturatedCoordinates(const SublatticeBasis& saturated);
    IntVec coords(const IntVec& point) const;       // length = rank
    IntVec lift_functional(const IntVec& g) const;  // g_hat with basis * g_hat^T = g^T

  private:
    SublatticeBasis basis_;
    SmithDecomposition snf_;
};

}  // namespace overdet
