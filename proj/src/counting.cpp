#include "overdet/counting.hpp"

#include "overdet/errors.hpp"

namespace overdet {

Int bkk_count(const Collection& c) {
    if (c.size() != c.n)
        throw PreconditionError("bkk_count: number of supports (" + std::to_string(c.size()) +
                                ") must equal the ambient dimension (" + std::to_string(c.n) +
                                ")");
    return mixed_volume_of_supports(c.supports, c.n).normalized;
}

CountReport overdetermined_count(const Collection& c, std::size_t cap) {
    if (c.size() <= c.n)
        throw PreconditionError(
            "overdetermined_count: need more supports than the ambient dimension, got " +
            std::to_string(c.size()) + " in dimension " + std::to_string(c.n));
    const long m = static_cast<long>(c.size()) - static_cast<long>(c.n);

    AnalysisReport report = analyze(c, cap);
    if (report.minimal_defect != -m)
        throw PreconditionError("overdetermined_count: minimal defect is " +
                                std::to_string(report.minimal_defect) + " but must equal -" +
                                std::to_string(m) +
                                " (the generic nonempty zero set is not 0-dimensional)");

    Reduction red = reduce(c, report);
    const std::size_t qdim = red.quotient.quotient_dim();
    if (red.residual_supports.size() != qdim)
        throw InternalError("overdetermined_count: residual count differs from quotient dim");

    MixedVolumeResult mv = mixed_volume_of_supports(red.residual_supports, qdim);

    CountReport out;
    out.factorial_factor = factorial(qdim);  // = (n - #J + m)!
    out.index_factor = red.index;
    out.mixed_volume_standard = mv.standard;
    out.mixed_volume_factor = mv.normalized;
    out.zero_set_dim = 0;
    out.predicted_count = red.index * mv.normalized;
    return out;
}

long zero_set_dimension(const Collection& c, std::size_t cap) {
    Reduction red = reduce(c, cap);
    return static_cast<long>(red.fiber_dim) - static_cast<long>(red.residual_supports.size());
}

ResultantDegrees resultant_degrees(const Collection& c, std::size_t cap) {
    if (c.size() != c.n + 1)
        throw PreconditionError("resultant_degrees: need exactly n + 1 supports, got " +
                                std::to_string(c.size()) + " in dimension " +
                                std::to_string(c.n));
    AnalysisReport report = analyze(c, cap);
    if (report.minimal_defect != -1)
        throw PreconditionError("resultant_degrees: minimal defect is " +
                                std::to_string(report.minimal_defect) +
                                " but must be -1 (consistency variety of codimension 1)");

    ResultantDegrees out;
    out.degrees.reserve(c.size());
    for (std::size_t skip = 0; skip < c.size(); ++skip) {
        std::vector<SupportSet> rest;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i != skip) rest.push_back(c.supports[i]);
        }
        // Intersection index of the remaining n supports; the mixed volume
        // vanishes exactly when that subcollection is overdetermined.
        out.degrees.push_back(mixed_volume_of_supports(rest, c.n).normalized);
    }
    return out;
}

}  // namespace overdet
