#pragma once

#include "overdet/collection.hpp"
#include "overdet/lattice.hpp"

namespace overdet {

// Reduction along the essential subcollection J: the difference group G_J
// (generated by within-support differences of the A_i, i in J), its
// saturation Lambda(J), the index [Lambda(J) : G_J], the canonical projection
// killing Lambda(J), and the projected residual supports of the complement.
struct Reduction {
    Subset essential;
    QuotientProjection quotient;
    Int index;                                // [Lambda(J) : G_J] >= 1
    std::vector<SupportSet> residual_supports;  // images of A_i, i not in J
    std::size_t fiber_dim = 0;                // n - rank Lambda(J)
};

// The residual collection always has minimal defect 0; this is checked on
// every call and raises InternalError when violated.
Reduction reduce(const Collection& c, std::size_t cap = kDefaultSubsetCap);
Reduction reduce(const Collection& c, const AnalysisReport& report);

// Rewrites a collection of minimal defect -d <= -1 into one of minimal defect
// exactly -1 with the same generic nonempty zero set: r-d+1 copies of the
// Minkowski sum over the essential J, followed by the complement supports.
// Inputs of minimal defect -1 are returned unchanged; generically consistent
// inputs are rejected.
Collection reduce_to_defect_one(const Collection& c, std::size_t cap = kDefaultSubsetCap);

}  // namespace overdet
