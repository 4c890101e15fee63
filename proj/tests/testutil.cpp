#include "testutil.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace testutil {

long draw(Rng& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

IntVec random_point(Rng& rng, std::size_t dim, long lo, long hi) {
    IntVec p(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = draw(rng, lo, hi);
    return p;
}

SupportSet random_support(Rng& rng, std::size_t dim, std::size_t max_points, long lo, long hi) {
    const std::size_t count = static_cast<std::size_t>(draw(rng, 1, static_cast<long>(max_points)));
    std::vector<IntVec> pts;
    for (std::size_t i = 0; i < count; ++i) pts.push_back(random_point(rng, dim, lo, hi));
    return make_support(dim, std::move(pts));
}

Collection random_collection(Rng& rng, std::size_t n, std::size_t k, std::size_t max_points,
                             long lo, long hi) {
    std::vector<SupportSet> supports;
    for (std::size_t i = 0; i < k; ++i)
        supports.push_back(random_support(rng, n, max_points, lo, hi));
    return make_collection(n, std::move(supports));
}

IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t ops) {
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2) return u;
    for (std::size_t t = 0; t < ops; ++t) {
        const std::size_t i = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) - 2));
        if (j >= i) ++j;
        switch (draw(rng, 0, 2)) {
            case 0:
                u.add_row(i, j, Int(draw(rng, -2, 2)));
                break;
            case 1:
                u.swap_rows(i, j);
                break;
            default:
                u.negate_row(i);
                break;
        }
    }
    return u;
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = draw(rng, lo, hi);
    return m;
}

SupportSet transform_support(const SupportSet& s, const IntMatrix& u) {
    std::vector<IntVec> pts;
    for (const IntVec& p : s.points) pts.push_back(mul_mat_vec(u, p));
    return make_support(s.dim, std::move(pts));
}

Collection transform_collection(const Collection& c, const IntMatrix& u) {
    std::vector<SupportSet> supports;
    for (const SupportSet& s : c.supports) supports.push_back(transform_support(s, u));
    return make_collection(c.n, std::move(supports));
}

Collection translate_collection(Rng& rng, const Collection& c, long lo, long hi) {
    std::vector<SupportSet> supports;
    for (const SupportSet& s : c.supports)
        supports.push_back(translate(s, random_point(rng, c.n, lo, hi)));
    return make_collection(c.n, std::move(supports));
}

namespace {

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Primitive normal of the hyperplane through d points, or empty if dependent.
IntVec subset_normal(const std::vector<IntVec>& pts, const std::vector<std::size_t>& ids,
                     std::size_t d) {
    IntMatrix m(d - 1, d);
    for (std::size_t i = 1; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i - 1, j) = pts[ids[i]][j] - pts[ids[0]][j];
    IntVec normal(d);
    bool nonzero = false;
    for (std::size_t j = 0; j < d; ++j) {
        IntMatrix minor(d - 1, d - 1);
        for (std::size_t r = 0; r + 1 < d; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < d; ++c) {
                if (c == j) continue;
                minor(r, cc++) = m(r, c);
            }
        }
        normal[j] = (j % 2 == 0) ? determinant(minor) : Int(-determinant(minor));
        if (normal[j] != 0) nonzero = true;
    }
    if (!nonzero) return {};
    return primitive_vector(normal);
}

}  // namespace

std::vector<std::pair<IntVec, Int>> brute_force_facets(const std::vector<IntVec>& points,
                                                       std::size_t d) {
    std::vector<IntVec> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<std::pair<IntVec, Int>> facets;
    std::vector<std::size_t> ids(d);
    // all d-subsets
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    if (pts.size() < d) return facets;
    while (true) {
        IntVec g = subset_normal(pts, idx, d);
        if (!g.empty()) {
            Int h = dot(g, pts[idx[0]]);
            bool all_le = true, all_ge = true;
            for (const IntVec& p : pts) {
                Int v = dot(g, p);
                if (v > h) all_le = false;
                if (v < h) all_ge = false;
            }
            if (all_le) facets.emplace_back(g, h);
            if (all_ge && !(all_le && all_ge)) {
                IntVec neg = g;
                for (Int& x : neg) x = -x;
                facets.emplace_back(neg, Int(-h));
            }
            if (all_le && all_ge) {
                // degenerate: every point on the hyperplane (lower-dim hull)
                IntVec neg = g;
                for (Int& x : neg) x = -x;
                facets.emplace_back(neg, Int(-h));
            }
        }
        // next combination
        std::size_t pos = d;
        while (pos > 0) {
            --pos;
            if (idx[pos] != pts.size() - d + pos) break;
        }
        if (idx[pos] == pts.size() - d + pos) break;
        ++idx[pos];
        for (std::size_t t = pos + 1; t < d; ++t) idx[t] = idx[t - 1] + 1;
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    (void)ids;
    return facets;
}

namespace {

Int count_lattice_points_scaled(const std::vector<IntVec>& pts,
                                const std::vector<std::pair<IntVec, Int>>& facets, std::size_t d,
                                long t) {
    // bounding box of t * conv(pts)
    std::vector<long> lo(d), hi(d);
    for (std::size_t c = 0; c < d; ++c) {
        Int mn = pts[0][c], mx = pts[0][c];
        for (const IntVec& p : pts) {
            if (p[c] < mn) mn = p[c];
            if (p[c] > mx) mx = p[c];
        }
        lo[c] = (Int(mn) * t).convert_to<long>();
        hi[c] = (Int(mx) * t).convert_to<long>();
        if (lo[c] > hi[c]) std::swap(lo[c], hi[c]);
    }
    Int count = 0;
    IntVec x(d);
    // odometer over the box
    std::vector<long> cur(lo);
    while (true) {
        for (std::size_t c = 0; c < d; ++c) x[c] = cur[c];
        bool inside = true;
        for (const auto& [g, h] : facets) {
            if (dot(g, x) > h * t) {
                inside = false;
                break;
            }
        }
        if (inside) ++count;
        std::size_t c = 0;
        while (c < d && cur[c] == hi[c]) {
            cur[c] = lo[c];
            ++c;
        }
        if (c == d) break;
        ++cur[c];
    }
    return count;
}

}  // namespace

Rat ehrhart_volume(const std::vector<IntVec>& points, std::size_t d) {
    std::vector<IntVec> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto facets = brute_force_facets(pts, d);
    if (facets.empty()) throw std::runtime_error("ehrhart_volume: no facets");

    // L(t) for t = 0..d, then d-th forward difference / d!.
    std::vector<Rat> values;
    for (long t = 0; t <= static_cast<long>(d); ++t)
        values.push_back(Rat(count_lattice_points_scaled(pts, facets, d, t)));
    for (std::size_t level = 0; level < d; ++level)
        for (std::size_t i = values.size() - 1; i > level; --i)
            values[i] = values[i] - values[i - 1];
    return values[d] / Rat(factorial(d));
}

Rat oracle_volume_in_dim(const std::vector<IntVec>& points, std::size_t d) {
    if (d == 0) return 1;
    std::vector<IntVec> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        IntVec v(d);
        for (std::size_t c = 0; c < d; ++c) v[c] = points[i][c] - points[0][c];
        diffs.push_back(std::move(v));
    }
    if (diffs.empty() || rank(IntMatrix::from_rows(diffs, d)) < d) return 0;
    return ehrhart_volume(points, d);
}

Int oracle_normalized_mixed_volume(const std::vector<SupportSet>& supports, std::size_t d) {
    if (supports.size() != d) throw std::runtime_error("oracle mixed volume: count != dim");
    if (d == 0) return 1;
    Rat acc = 0;
    for (std::size_t mask = 1; mask < (std::size_t(1) << d); ++mask) {
        std::vector<IntVec> sum{IntVec(d, Int(0))};
        std::size_t pop = 0;
        for (std::size_t i = 0; i < d; ++i) {
            if (!(mask & (std::size_t(1) << i))) continue;
            ++pop;
            std::vector<IntVec> next;
            for (const IntVec& s : sum)
                for (const IntVec& p : supports[i].points) {
                    IntVec t(d);
                    for (std::size_t c = 0; c < d; ++c) t[c] = s[c] + p[c];
                    next.push_back(std::move(t));
                }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            sum = std::move(next);
        }
        Rat vol = oracle_volume_in_dim(sum, d);
        acc += ((d - pop) % 2 == 0) ? vol : -vol;
    }
    if (denominator(acc) != 1) throw std::runtime_error("oracle mixed volume: not an integer");
    return numerator(acc);
}

Int coset_count(const IntMatrix& x) {
    const std::size_t r = x.rows();
    if (r != x.cols()) throw std::runtime_error("coset_count: square matrix required");
    // box bounds per coordinate: sums of negative / positive parts of columns
    std::vector<long> lo(r, 0), hi(r, 0);
    for (std::size_t c = 0; c < r; ++c) {
        Int neg = 0, pos = 0;
        for (std::size_t i = 0; i < r; ++i) {
            if (x(i, c) < 0) neg += x(i, c);
            if (x(i, c) > 0) pos += x(i, c);
        }
        lo[c] = neg.convert_to<long>();
        hi[c] = pos.convert_to<long>();
    }

    // membership: solve t * x = p exactly; inside iff all t_i in [0, 1)
    auto inside = [&](const IntVec& p) {
        // Gaussian elimination over Q on x^T t^T = p^T
        std::vector<std::vector<Rat>> aug(r, std::vector<Rat>(r + 1));
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) aug[i][j] = Rat(x(j, i));
            aug[i][r] = Rat(p[i]);
        }
        for (std::size_t col = 0; col < r; ++col) {
            std::size_t piv = col;
            while (piv < r && aug[piv][col] == 0) ++piv;
            if (piv == r) throw std::runtime_error("coset_count: singular matrix");
            std::swap(aug[piv], aug[col]);
            for (std::size_t i = 0; i < r; ++i) {
                if (i == col || aug[i][col] == 0) continue;
                Rat f = aug[i][col] / aug[col][col];
                for (std::size_t j = col; j <= r; ++j) aug[i][j] -= f * aug[col][j];
            }
        }
        for (std::size_t i = 0; i < r; ++i) {
            Rat t = aug[i][r] / aug[i][i];
            if (t < 0 || t >= 1) return false;
        }
        return true;
    };

    Int count = 0;
    std::vector<long> cur(lo);
    while (true) {
        IntVec p(r);
        for (std::size_t c = 0; c < r; ++c) p[c] = cur[c];
        if (inside(p)) ++count;
        std::size_t c = 0;
        while (c < r && cur[c] == hi[c]) {
            cur[c] = lo[c];
            ++c;
        }
        if (c == r) break;
        ++cur[c];
    }
    return count;
}

int oracle_span_dim(const Collection& c, std::uint32_t mask) {
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!(mask & (1u << i))) continue;
        const auto& pts = c.supports[i].points;
        for (std::size_t p = 1; p < pts.size(); ++p) {
            IntVec v(c.n);
            for (std::size_t j = 0; j < c.n; ++j) v[j] = pts[p][j] - pts[0][j];
            rows.push_back(std::move(v));
        }
    }
    if (rows.empty()) return 0;
    // local fraction-free elimination
    std::size_t r = 0;
    for (std::size_t col = 0; col < c.n && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            Int a = rows[r][col], b = rows[i][col];
            for (std::size_t j = 0; j < c.n; ++j) rows[i][j] = a * rows[i][j] - b * rows[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace testutil
