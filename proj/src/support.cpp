#include "overdet/support.hpp"

#include <algorithm>

#include "overdet/errors.hpp"

namespace overdet {

SupportSet make_support(std::size_t dim, std::vector<IntVec> points) {
    if (points.empty()) throw PreconditionError("support set must be nonempty");
    for (const IntVec& p : points) {
        if (p.size() != dim)
            throw PreconditionError("support point has wrong number of coordinates");
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return SupportSet{dim, std::move(points)};
}

SupportSet minkowski_sum(const SupportSet& a, const SupportSet& b) {
    if (a.dim != b.dim) throw PreconditionError("minkowski_sum: dimension mismatch");
    std::vector<IntVec> sums;
    sums.reserve(a.points.size() * b.points.size());
    for (const IntVec& p : a.points)
        for (const IntVec& q : b.points) {
            IntVec s(a.dim);
            for (std::size_t i = 0; i < a.dim; ++i) s[i] = p[i] + q[i];
            sums.push_back(std::move(s));
        }
    return make_support(a.dim, std::move(sums));
}

SupportSet translate(const SupportSet& a, const IntVec& shift) {
    if (shift.size() != a.dim) throw PreconditionError("translate: shift has wrong dimension");
    std::vector<IntVec> pts = a.points;
    for (IntVec& p : pts)
        for (std::size_t i = 0; i < a.dim; ++i) p[i] += shift[i];
    return make_support(a.dim, std::move(pts));
}

IntMatrix difference_matrix(const SupportSet& a) {
    const std::size_t m = a.points.size();
    IntMatrix d(m == 0 ? 0 : m - 1, a.dim);
    for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) d(i - 1, j) = a.points[i][j] - a.points[0][j];
    return d;
}

}  // namespace overdet
