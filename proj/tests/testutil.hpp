#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "overdet/collection.hpp"
#include "overdet/int_matrix.hpp"
#include "overdet/polytope.hpp"

// Shared helpers for the unit and acceptance suites: deterministic random
// generators plus slow, independent oracles the fast implementations are
// checked against.
namespace testutil {

using namespace overdet;

using Rng = std::mt19937_64;

long draw(Rng& rng, long lo, long hi);

IntVec random_point(Rng& rng, std::size_t dim, long lo, long hi);
SupportSet random_support(Rng& rng, std::size_t dim, std::size_t max_points, long lo, long hi);
Collection random_collection(Rng& rng, std::size_t n, std::size_t k, std::size_t max_points,
                             long lo, long hi);

// Product of random elementary row operations; determinant is +-1.
IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t ops = 8);
IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi);

SupportSet transform_support(const SupportSet& s, const IntMatrix& u);
Collection transform_collection(const Collection& c, const IntMatrix& u);
Collection translate_collection(Rng& rng, const Collection& c, long lo, long hi);

// ---- independent oracles ----

// All supporting hyperplanes of conv(points) by exhaustive enumeration of
// d-subsets with half-space validation. Requires a full-dimensional set.
std::vector<std::pair<IntVec, Int>> brute_force_facets(const std::vector<IntVec>& points,
                                                       std::size_t d);

// Euclidean volume via the Ehrhart polynomial: counts lattice points of t*P
// for t = 0..d and reads off the leading coefficient. Full-dimensional only.
Rat ehrhart_volume(const std::vector<IntVec>& points, std::size_t d);

// 0 when conv(points) is lower-dimensional, else ehrhart_volume.
Rat oracle_volume_in_dim(const std::vector<IntVec>& points, std::size_t d);

// Inclusion-exclusion normalized mixed volume on top of the brute-force
// volume oracle; fully independent of the production hull.
Int oracle_normalized_mixed_volume(const std::vector<SupportSet>& supports, std::size_t d);

// Number of residue classes of Z^r modulo the row span of x (full rank),
// counted by enumerating lattice points of the half-open fundamental
// parallelepiped with an exact rational solve.
Int coset_count(const IntMatrix& x);

// Rank of the stacked difference vectors of the chosen supports, computed
// with a local fraction-free elimination (independent of EchelonBasis).
int oracle_span_dim(const Collection& c, std::uint32_t mask);

}  // namespace testutil
