#pragma once

#include "overdet/mixed_volume.hpp"
#include "overdet/reduction.hpp"

namespace overdet {

// Predicted number of points of the generic nonempty zero set, together with
// the factors it decomposes into:
//
//   predicted = (n - #J + m)! * ind(J) * MV
//
// where m = k - n is the overdeterminacy, J the essential subcollection, MV
// the (standard) mixed volume of the projected residual polytopes measured in
// quotient-lattice coordinates. factorial_factor is (n - #J + m)!, which
// equals (quotient dim)!, so predicted is also index * normalized MV; the
// normalized integer value is stored as mixed_volume_factor.
struct CountReport {
    Int predicted_count;
    Int factorial_factor;
    Int index_factor;
    Rat mixed_volume_standard;
    Int mixed_volume_factor;  // normalized: (quotient dim)! * standard
    long zero_set_dim = 0;
};

// Classical count for k = n supports: n! * MV of the Newton polytopes.
Int bkk_count(const Collection& c);

// Requires k = n + m with m >= 1 and minimal defect exactly -m (equivalently
// a 0-dimensional generic nonempty zero set). Throws PreconditionError naming
// the violated condition otherwise.
CountReport overdetermined_count(const Collection& c, std::size_t cap = kDefaultSubsetCap);

// Dimension of the generic nonempty zero set: fiber dimension of the
// reduction minus the number of residual supports.
long zero_set_dimension(const Collection& c, std::size_t cap = kDefaultSubsetCap);

// Multidegree of the sparse resultant for k = n + 1 supports with minimal
// defect -1: entry i is the generic root count of the remaining n supports
// (zero exactly when that subcollection is overdetermined, in particular for
// every i outside the essential subcollection).
struct ResultantDegrees {
    std::vector<Int> degrees;  // n + 1 entries
};

ResultantDegrees resultant_degrees(const Collection& c, std::size_t cap = kDefaultSubsetCap);

}  // namespace overdet
