#include "overdet/collection.hpp"

#include <bit>

#include "overdet/errors.hpp"
#include "overdet/int_matrix.hpp"

namespace overdet {

Collection make_collection(std::size_t n, std::vector<SupportSet> supports) {
    if (supports.empty()) throw PreconditionError("collection must contain at least one support");
    for (const SupportSet& s : supports) {
        if (s.dim != n)
            throw PreconditionError("collection: support dimension differs from ambient");
    }
    return Collection{n, std::move(supports)};
}

Subset Subset::of(std::initializer_list<std::size_t> members_1based) {
    Subset s;
    for (std::size_t m : members_1based) s.bits |= (1u << (m - 1));
    return s;
}

std::size_t Subset::count() const { return static_cast<std::size_t>(std::popcount(bits)); }

std::vector<std::size_t> Subset::members_1based() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 32; ++i) {
        if (bits & (1u << i)) out.push_back(i + 1);
    }
    return out;
}

int AnalysisReport::span_dim_of(Subset j) const {
    if (j.bits >= span_dims.size()) throw PreconditionError("subset out of range");
    return span_dims[j.bits];
}

int AnalysisReport::defect_of(Subset j) const {
    return span_dim_of(j) - static_cast<int>(j.count());
}

namespace {

std::vector<std::vector<IntVec>> support_direction_vectors(const Collection& c) {
    std::vector<std::vector<IntVec>> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        IntMatrix d = difference_matrix(c.supports[i]);
        for (std::size_t r = 0; r < d.rows(); ++r) {
            IntVec v = primitive_vector(d.row(r));
            if (!is_zero_vec(v)) out[i].push_back(std::move(v));
        }
    }
    return out;
}

// Depth-first sweep over all subcollections sharing one incremental echelon
// basis; fills span_dims[mask] = dim V_mask.
void sweep(const std::vector<std::vector<IntVec>>& dirs, std::size_t i, std::uint32_t mask,
           EchelonBasis& basis, std::vector<int>& span_dims) {
    if (i == dirs.size()) {
        span_dims[mask] = static_cast<int>(basis.rank());
        return;
    }
    sweep(dirs, i + 1, mask, basis, span_dims);
    std::size_t pushed = 0;
    for (const IntVec& v : dirs[i]) {
        if (basis.push(v)) ++pushed;
    }
    sweep(dirs, i + 1, mask | (1u << i), basis, span_dims);
    for (std::size_t t = 0; t < pushed; ++t) basis.pop();
}

}  // namespace

AnalysisReport analyze(const Collection& c, std::size_t cap) {
    const std::size_t k = c.size();
    if (k > cap || k > 31)
        throw CapacityError("subset enumeration over " + std::to_string(k) +
                            " supports exceeds the cap of " + std::to_string(cap));

    AnalysisReport report;
    report.k = k;
    report.span_dims.assign(std::size_t(1) << k, 0);

    auto dirs = support_direction_vectors(c);
    EchelonBasis basis;
    sweep(dirs, 0, 0, basis, report.span_dims);

    report.minimal_defect = 0;  // def of the empty subcollection
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << k); ++mask) {
        int def = report.span_dims[mask] - std::popcount(mask);
        if (def < report.minimal_defect) report.minimal_defect = def;
    }
    report.generically_consistent = report.minimal_defect >= 0;
    report.codimension = static_cast<std::size_t>(-report.minimal_defect);

    if (report.generically_consistent) {
        report.essential = Subset::empty();
    } else {
        // Inclusion-minimal minimizers; existence and uniqueness is a theorem
        // but cheap to re-verify, so verify on every call.
        std::vector<std::uint32_t> minimizers;
        for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << k); ++mask) {
            if (report.span_dims[mask] - std::popcount(mask) == report.minimal_defect)
                minimizers.push_back(mask);
        }
        std::vector<std::uint32_t> minimal;
        for (std::uint32_t m : minimizers) {
            bool has_smaller = false;
            for (std::uint32_t o : minimizers) {
                if (o != m && (o & ~m) == 0) {
                    has_smaller = true;
                    break;
                }
            }
            if (!has_smaller) minimal.push_back(m);
        }
        if (minimal.size() != 1)
            throw InternalError("essential subcollection is not unique; " +
                                std::to_string(minimal.size()) + " inclusion-minimal minimizers");
        report.essential = Subset{minimal[0]};
    }
    return report;
}

int defect(const Collection& c, Subset j) {
    if (j.bits >= (std::uint32_t(1) << c.size()))
        throw PreconditionError("defect: subset out of range");
    auto dirs = support_direction_vectors(c);
    EchelonBasis basis;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!(j.bits & (1u << i))) continue;
        for (const IntVec& v : dirs[i]) basis.push(v);
    }
    return static_cast<int>(basis.rank()) - static_cast<int>(j.count());
}

int minimal_defect(const Collection& c, std::size_t cap) { return analyze(c, cap).minimal_defect; }

Subset essential_subcollection(const Collection& c, std::size_t cap) {
    return analyze(c, cap).essential;
}

bool is_generically_consistent(const Collection& c, std::size_t cap) {
    return analyze(c, cap).generically_consistent;
}

std::size_t consistency_codimension(const Collection& c, std::size_t cap) {
    return analyze(c, cap).codimension;
}

Subset consistent_basis_subcollection(const AnalysisReport& report) {
    const Subset j = report.essential;
    if (j == Subset::empty()) return Subset::empty();
    const std::size_t target = static_cast<std::size_t>(report.span_dim_of(j));

    std::vector<std::size_t> members = j.members_1based();
    std::vector<std::size_t> choice(target);
    // Lexicographically first size-target subset of J all of whose
    // subcollections have nonnegative defect.
    auto ok = [&](std::uint32_t bits) {
        for (std::uint32_t sub = bits; sub != 0; sub = (sub - 1) & bits) {
            if (report.span_dims[sub] - std::popcount(sub) < 0) return false;
        }
        return true;
    };
    // Enumerate combinations of `members` in lexicographic order.
    for (std::size_t i = 0; i < target; ++i) choice[i] = i;
    while (true) {
        std::uint32_t bits = 0;
        for (std::size_t i : choice) bits |= (1u << (members[i] - 1));
        if (ok(bits)) return Subset{bits};
        // next combination
        std::size_t pos = target;
        while (pos > 0) {
            --pos;
            if (choice[pos] != members.size() - target + pos) break;
        }
        if (choice[pos] == members.size() - target + pos) break;
        ++choice[pos];
        for (std::size_t t = pos + 1; t < target; ++t) choice[t] = choice[t - 1] + 1;
    }
    throw InternalError("no consistent basis subcollection found inside the essential set");
}

Subset consistent_basis_subcollection(const Collection& c, std::size_t cap) {
    return consistent_basis_subcollection(analyze(c, cap));
}

}  // namespace overdet
