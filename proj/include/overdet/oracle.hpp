#pragma once

#include <cstdint>
#include <utility>

#include "overdet/collection.hpp"
#include "overdet/laurent.hpp"

namespace overdet {

// A system sampled from the consistency variety: every polynomial vanishes
// exactly at the witness. Sampling a random witness and solving one
// coefficient per polynomial realizes a generic point of the incidence
// variety; genericity within the consistency variety is a measure-one event
// over the sampled rationals, asserted rather than certified.
struct ConsistentSample {
    std::vector<LaurentPoly> system;
    std::vector<Rat> witness;
    std::uint64_t seed = 0;
};

inline const Int kDefaultCoeffBound = 1000000;

// Witness coordinates uniform in {1..bound}; all but the lexicographically
// last coefficient of each polynomial uniform in {-bound..bound}, the last
// one solved exactly from vanishing at the witness. Deterministic per seed.
// Singleton supports are rejected (a one-term polynomial with a nonzero
// coefficient cannot vanish on the torus).
ConsistentSample sample_consistent_system(const Collection& c, std::uint64_t seed,
                                          const Int& coeff_bound = kDefaultCoeffBound);

// Unconstrained generic system: every support point gets a uniform nonzero
// coefficient in {-bound..bound}.
std::vector<LaurentPoly> sample_generic_system(const Collection& c, std::uint64_t seed,
                                               const Int& coeff_bound = kDefaultCoeffBound);

// Distinct common roots in C^* of a univariate Laurent system: degree of the
// squarefree part of the gcd after clearing monomial factors.
std::size_t count_common_roots_univariate(const std::vector<LaurentPoly>& system);

// Distinct common roots in (C^*)^2, by seeded monomial shear and Sylvester
// elimination. Correct with probability 1 over the shear; a detected
// positive-dimensional zero set raises PreconditionError.
std::size_t count_common_roots_bivariate(const std::vector<LaurentPoly>& system,
                                         std::uint64_t seed);

struct VerificationReport {
    Int predicted;
    std::vector<std::pair<std::uint64_t, std::size_t>> trials;  // (seed, oracle count)
    Rat agreement_fraction;
};

// Samples `trials` consistent systems and counts their roots with the exact
// elimination oracle (n <= 2 only).
VerificationReport verify_count(const Collection& c, std::size_t trials, std::uint64_t seed,
                                const Int& coeff_bound = kDefaultCoeffBound,
                                std::size_t cap = kDefaultSubsetCap);

}  // namespace overdet
