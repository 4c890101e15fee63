#pragma once

#include <vector>

#include "overdet/int_matrix.hpp"

namespace overdet {

// Finite set of exponent vectors in Z^n: the support of a Laurent polynomial.
// Points are deduplicated and kept in lexicographic order.
struct SupportSet {
    std::size_t dim = 0;
    std::vector<IntVec> points;

    bool operator==(const SupportSet& o) const = default;
};

// Validates, deduplicates and sorts. Throws PreconditionError on an empty set
// or a point of the wrong length.
SupportSet make_support(std::size_t dim, std::vector<IntVec> points);

// {a + b : a in A, b in B}, deduplicated. Dimensions must match.
SupportSet minkowski_sum(const SupportSet& a, const SupportSet& b);

SupportSet translate(const SupportSet& a, const IntVec& shift);

// Rows are points[i] - points[0] for i >= 1; spans the direction space of A.
IntMatrix difference_matrix(const SupportSet& a);

}  // namespace overdet
