#pragma once

#include <vector>

#include "overdet/polytope.hpp"

namespace overdet {

// standard is the mixed volume with Vol(P,...,P) = volume(P); normalized is
// d! times that, an integer for lattice polytopes.
struct MixedVolumeResult {
    Rat standard;
    Int normalized;
};

// Mixed volume of d polytopes in R^d via inclusion-exclusion over Minkowski
// sums of vertex sets:
//   d! MV = sum over nonempty S of (-1)^(d-|S|) Vol(sum of P_i, i in S).
// The empty product in R^0 yields normalized = 1. Throws if the number of
// polytopes differs from the common ambient dimension.
MixedVolumeResult mixed_volume(const std::vector<Polytope>& polytopes);

// Same, but takes the defining supports directly.
MixedVolumeResult mixed_volume_of_supports(const std::vector<SupportSet>& supports,
                                           std::size_t dim);

}  // namespace overdet
