#include "overdet/reduction.hpp"

#include "overdet/errors.hpp"

namespace overdet {

namespace {

// Minimal defect of a list of supports, allowing the empty list (defect 0).
// Small helper used for the residual zero-defect invariant.
int minimal_defect_of_supports(const std::vector<SupportSet>& supports, std::size_t n) {
    if (supports.empty()) return 0;
    return analyze(Collection{n, supports}).minimal_defect;
}

}  // namespace

Reduction reduce(const Collection& c, const AnalysisReport& report) {
    const Subset j = report.essential;

    // G_J from within-support differences only, never across supports.
    std::vector<IntVec> generators;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!(j.bits & (1u << i))) continue;
        IntMatrix d = difference_matrix(c.supports[i]);
        for (std::size_t r = 0; r < d.rows(); ++r) generators.push_back(d.row(r));
    }
    SublatticeBasis g_j = lattice_span(IntMatrix::from_rows(generators, c.n), c.n);
    SublatticeBasis lambda_j = saturate(g_j);
    Int index = sublattice_index(g_j, lambda_j);
    QuotientProjection quotient = quotient_projection(lambda_j);

    Reduction out;
    out.essential = j;
    out.index = index;
    out.fiber_dim = c.n - lambda_j.rank();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (j.bits & (1u << i)) continue;
        std::vector<IntVec> image;
        image.reserve(c.supports[i].points.size());
        for (const IntVec& p : c.supports[i].points) image.push_back(apply_projection(quotient, p));
        out.residual_supports.push_back(make_support(quotient.quotient_dim(), std::move(image)));
    }
    out.quotient = std::move(quotient);

    if (minimal_defect_of_supports(out.residual_supports, out.quotient.quotient_dim()) != 0)
        throw InternalError("reduce: projected complement does not have minimal defect 0");
    return out;
}

Reduction reduce(const Collection& c, std::size_t cap) { return reduce(c, analyze(c, cap)); }

Collection reduce_to_defect_one(const Collection& c, std::size_t cap) {
    AnalysisReport report = analyze(c, cap);
    if (report.minimal_defect >= 0)
        throw PreconditionError(
            "reduce_to_defect_one: collection is generically consistent (minimal defect 0)");
    if (report.minimal_defect == -1) return c;

    const std::size_t d = static_cast<std::size_t>(-report.minimal_defect);
    const Subset j = report.essential;
    const std::size_t r = j.count();

    SupportSet product = c.supports[j.members_1based()[0] - 1];
    bool first = true;
    for (std::size_t m : j.members_1based()) {
        if (first) {
            first = false;
            continue;
        }
        product = minkowski_sum(product, c.supports[m - 1]);
    }

    std::vector<SupportSet> w;
    for (std::size_t t = 0; t < r - d + 1; ++t) w.push_back(product);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!(j.bits & (1u << i))) w.push_back(c.supports[i]);
    }
    Collection out = make_collection(c.n, std::move(w));
    if (analyze(out, cap).minimal_defect != -1)
        throw InternalError("reduce_to_defect_one: output does not have minimal defect -1");
    return out;
}

}  // namespace overdet
