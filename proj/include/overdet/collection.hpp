#pragma once

#include <cstdint>
#include <vector>

#include "overdet/support.hpp"

namespace overdet {

// Ordered collection of supports in a common Z^n.
struct Collection {
    std::size_t n = 0;
    std::vector<SupportSet> supports;

    std::size_t size() const { return supports.size(); }
};

Collection make_collection(std::size_t n, std::vector<SupportSet> supports);

// Subcollection of {1,...,k} as a bitmask (bit i-1 for member i).
struct Subset {
    std::uint32_t bits = 0;

    static Subset empty() { return Subset{0}; }
    static Subset full(std::size_t k) { return Subset{static_cast<std::uint32_t>((1u << k) - 1)}; }
    static Subset of(std::initializer_list<std::size_t> members_1based);

    bool contains(std::size_t i_1based) const { return bits & (1u << (i_1based - 1)); }
    std::size_t count() const;
    bool subset_of(Subset o) const { return (bits & ~o.bits) == 0; }
    std::vector<std::size_t> members_1based() const;

    bool operator==(const Subset& o) const = default;
};

inline constexpr std::size_t kDefaultSubsetCap = 24;

// Full defect analysis of a collection. V_i is the rational span of the
// within-support differences of A_i; def(J) = dim(sum of V_i, i in J) - |J|,
// with def of the empty subcollection 0. The minimal defect is therefore
// always <= 0, and the collection is generically consistent exactly when it
// is 0. The essential subcollection is the unique inclusion-minimal minimizer
// (empty in the consistent case); uniqueness is re-verified during analysis
// and a violation raises InternalError.
struct AnalysisReport {
    std::size_t k = 0;
    int minimal_defect = 0;
    Subset essential;
    std::size_t codimension = 0;
    bool generically_consistent = false;

    int defect_of(Subset j) const;
    int span_dim_of(Subset j) const;

    std::vector<int> span_dims;  // indexed by bitmask
};

// Enumerates all 2^k subcollections; throws CapacityError when k > cap.
AnalysisReport analyze(const Collection& c, std::size_t cap = kDefaultSubsetCap);

int defect(const Collection& c, Subset j);
int minimal_defect(const Collection& c, std::size_t cap = kDefaultSubsetCap);
Subset essential_subcollection(const Collection& c, std::size_t cap = kDefaultSubsetCap);
bool is_generically_consistent(const Collection& c, std::size_t cap = kDefaultSubsetCap);
std::size_t consistency_codimension(const Collection& c, std::size_t cap = kDefaultSubsetCap);

// Some I inside the essential J with |I| = dim V_J and no negative
// sub-defect; the first such I in lexicographic member order (the choice is
// not unique, the order makes it deterministic).
Subset consistent_basis_subcollection(const Collection& c, std::size_t cap = kDefaultSubsetCap);
Subset consistent_basis_subcollection(const AnalysisReport& report);

}  // namespace overdet
