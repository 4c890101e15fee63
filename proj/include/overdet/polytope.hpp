#pragma once

#include <vector>

#include "overdet/support.hpp"

namespace overdet {

// Supporting halfspace normal * x <= offset with a primitive integer normal.
struct Facet {
    IntVec normal;
    Int offset;

    bool operator==(const Facet& o) const = default;
};

// Convex hull of a support set. Vertices are exactly the extreme points, in
// lexicographic order. For a polytope of affine dimension d < ambient_dim the
// facet list describes the facets within the affine hull, each represented by
// one valid ambient inequality that is tight exactly on it; a 0-dimensional
// polytope has no facets.
struct Polytope {
    std::size_t ambient_dim = 0;
    std::size_t affine_dim = 0;
    std::vector<IntVec> vertices;
    std::vector<Facet> facets;

    bool operator==(const Polytope& o) const = default;
};

Polytope newton_polytope(const SupportSet& a);

// Volume measured in the polytope's own affine span, normalized with respect
// to the induced lattice (for a full-dimensional polytope this is the
// ordinary euclidean volume; on a strict affine subspace euclidean volume is
// irrational in general, while the lattice normalization stays exact and is
// the one every root-counting formula here needs). A point has volume 1.
Rat volume(const Polytope& p);

// Euclidean d-volume of conv(points) inside Z^d; zero when the hull is not
// full-dimensional. Points need not be deduplicated.
Rat volume_in_dim(const std::vector<IntVec>& points, std::size_t d);

}  // namespace overdet
