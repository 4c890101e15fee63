#include "overdet/mixed_volume.hpp"

#include <algorithm>

#include "overdet/errors.hpp"

namespace overdet {

MixedVolumeResult mixed_volume(const std::vector<Polytope>& polytopes) {
    const std::size_t d = polytopes.size();
    for (const Polytope& p : polytopes) {
        if (p.ambient_dim != d)
            throw PreconditionError(
                "mixed_volume: number of polytopes must equal the ambient dimension");
    }
    if (d == 0) return MixedVolumeResult{Rat(1), Int(1)};

    Rat normalized = 0;
    for (std::size_t mask = 1; mask < (std::size_t(1) << d); ++mask) {
        std::vector<IntVec> sum_points{IntVec(d, Int(0))};
        std::size_t popcount = 0;
        for (std::size_t i = 0; i < d; ++i) {
            if (!(mask & (std::size_t(1) << i))) continue;
            ++popcount;
            std::vector<IntVec> next;
            next.reserve(sum_points.size() * polytopes[i].vertices.size());
            for (const IntVec& s : sum_points)
                for (const IntVec& v : polytopes[i].vertices) {
                    IntVec t(d);
                    for (std::size_t c = 0; c < d; ++c) t[c] = s[c] + v[c];
                    next.push_back(std::move(t));
                }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            sum_points = std::move(next);
        }
        Rat vol = volume_in_dim(sum_points, d);
        if ((d - popcount) % 2 == 0)
            normalized += vol;
        else
            normalized -= vol;
    }

    if (denominator(normalized) != 1)
        throw InternalError("mixed_volume: normalized value is not an integer");
    if (normalized < 0) throw InternalError("mixed_volume: negative mixed volume");
    return MixedVolumeResult{normalized / Rat(factorial(d)), numerator(normalized)};
}

MixedVolumeResult mixed_volume_of_supports(const std::vector<SupportSet>& supports,
                                           std::size_t dim) {
    std::vector<Polytope> ps;
    ps.reserve(supports.size());
    for (const SupportSet& s : supports) {
        if (s.dim != dim) throw PreconditionError("mixed_volume: support dimension mismatch");
        ps.push_back(newton_polytope(s));
    }
    return mixed_volume(ps);
}

}  // namespace overdet
