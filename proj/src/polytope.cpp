#include "overdet/polytope.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "overdet/errors.hpp"
#include "overdet/lattice.hpp"

namespace overdet {
namespace {

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Primitive normal of the hyperplane through d points of Z^d, via cofactor
// expansion of the (d-1) x d difference matrix. Zero vector means the points
// are affinely dependent.
IntVec hyperplane_normal(const std::vector<IntVec>& pts, const std::vector<std::size_t>& ids) {
    const std::size_t d = pts[ids[0]].size();
    IntMatrix m(d - 1, d);
    for (std::size_t i = 1; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i - 1, j) = pts[ids[i]][j] - pts[ids[0]][j];
    IntVec normal(d);
    for (std::size_t j = 0; j < d; ++j) {
        IntMatrix minor(d - 1, d - 1);
        for (std::size_t r = 0; r < d - 1; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < d; ++c) {
                if (c == j) continue;
                minor(r, cc++) = m(r, c);
            }
        }
        Int det = determinant(minor);
        normal[j] = (j % 2 == 0) ? det : Int(-det);
    }
    return primitive_vector(normal);
}

struct TriFacet {
    IntVec normal;
    Int offset;
    std::vector<std::size_t> verts;  // d point indices, sorted
    bool alive = true;
};

struct HullData {
    std::vector<std::size_t> vertex_ids;              // extreme points, ascending
    std::vector<TriFacet> tri_facets;                 // alive triangulated boundary
    std::vector<std::pair<IntVec, Int>> hyperplanes;  // merged facets, canonical order
};

// Incremental convex hull of a full-dimensional point set in Z^d, d >= 2.
// Exact arithmetic, strict "beyond" test, deterministic insertion order.
HullData hull_full_dim(const std::vector<IntVec>& pts, std::size_t d) {
    // Initial simplex: greedily extend an affinely independent subset.
    std::vector<std::size_t> simplex{0};
    EchelonBasis eb;
    for (std::size_t i = 1; i < pts.size() && simplex.size() < d + 1; ++i) {
        IntVec diff(d);
        for (std::size_t j = 0; j < d; ++j) diff[j] = pts[i][j] - pts[0][j];
        if (eb.push(diff)) simplex.push_back(i);
    }
    if (simplex.size() != d + 1) throw InternalError("hull: point set not full-dimensional");

    // Interior reference: the simplex vertex sum (centroid scaled by d+1).
    IntVec ref(d, Int(0));
    for (std::size_t id : simplex)
        for (std::size_t j = 0; j < d; ++j) ref[j] += pts[id][j];
    const Int scale = Int(d + 1);

    std::vector<TriFacet> facets;
    auto make_facet = [&](std::vector<std::size_t> ids) {
        std::sort(ids.begin(), ids.end());
        IntVec g = hyperplane_normal(pts, ids);
        if (is_zero_vec(g)) throw InternalError("hull: degenerate facet");
        Int h = dot(g, pts[ids[0]]);
        Int side = dot(g, ref) - scale * h;
        if (side > 0) {
            for (Int& x : g) x = -x;
            h = -h;
            side = -side;
        }
        if (side == 0) throw InternalError("hull: reference point on facet plane");
        facets.push_back(TriFacet{std::move(g), std::move(h), std::move(ids), true});
    };
    for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
        std::vector<std::size_t> ids;
        for (std::size_t t = 0; t < simplex.size(); ++t) {
            if (t != skip) ids.push_back(simplex[t]);
        }
        make_facet(std::move(ids));
    }

    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (std::find(simplex.begin(), simplex.end(), i) != simplex.end()) continue;
        std::vector<std::size_t> visible;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            if (facets[f].alive && dot(facets[f].normal, pts[i]) > facets[f].offset)
                visible.push_back(f);
        }
        if (visible.empty()) continue;  // inside the current hull

        // Every ridge of the triangulated boundary borders exactly two alive
        // facets; the horizon is where a visible facet meets an invisible one.
        std::map<std::vector<std::size_t>, std::vector<std::size_t>> ridges;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            if (!facets[f].alive) continue;
            const auto& vs = facets[f].verts;
            for (std::size_t skip = 0; skip < vs.size(); ++skip) {
                std::vector<std::size_t> key;
                for (std::size_t t = 0; t < vs.size(); ++t) {
                    if (t != skip) key.push_back(vs[t]);
                }
                ridges[key].push_back(f);
            }
        }
        std::vector<std::vector<std::size_t>> horizon;
        for (const auto& [key, fs] : ridges) {
            if (fs.size() != 2) throw InternalError("hull: ridge does not border two facets");
            const bool v0 = dot(facets[fs[0]].normal, pts[i]) > facets[fs[0]].offset;
            const bool v1 = dot(facets[fs[1]].normal, pts[i]) > facets[fs[1]].offset;
            if (v0 != v1) horizon.push_back(key);
        }
        for (std::size_t f : visible) facets[f].alive = false;
        for (auto& key : horizon) {
            key.push_back(i);
            make_facet(std::move(key));
        }
    }

    HullData out;
    for (auto& f : facets) {
        if (f.alive) out.tri_facets.push_back(std::move(f));
    }

    // Merge coplanar triangulation pieces into genuine facets.
    for (const auto& f : out.tri_facets) out.hyperplanes.emplace_back(f.normal, f.offset);
    std::sort(out.hyperplanes.begin(), out.hyperplanes.end());
    out.hyperplanes.erase(std::unique(out.hyperplanes.begin(), out.hyperplanes.end()),
                          out.hyperplanes.end());

    // A boundary point is a vertex iff its tight facet normals span R^d.
    std::vector<std::size_t> candidates;
    for (const auto& f : out.tri_facets)
        for (std::size_t id : f.verts) candidates.push_back(id);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (std::size_t id : candidates) {
        std::vector<IntVec> tight;
        for (const auto& [plane, h] : out.hyperplanes) {
            if (dot(plane, pts[id]) == h) tight.push_back(plane);
        }
        if (tight.size() >= d && rank(IntMatrix::from_rows(tight, d)) == d)
            out.vertex_ids.push_back(id);
    }
    return out;
}

HullData hull_dim_one(const std::vector<IntVec>& pts) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i][0] < pts[lo][0]) lo = i;
        if (pts[i][0] > pts[hi][0]) hi = i;
    }
    HullData out;
    out.vertex_ids = {std::min(lo, hi), std::max(lo, hi)};
    out.tri_facets.push_back(TriFacet{{Int(1)}, pts[hi][0], {hi}, true});
    out.tri_facets.push_back(TriFacet{{Int(-1)}, -pts[lo][0], {lo}, true});
    out.hyperplanes = {{{Int(1)}, pts[hi][0]}, {{Int(-1)}, Int(-pts[lo][0])}};
    return out;
}

HullData hull_of(const std::vector<IntVec>& pts, std::size_t d) {
    return d == 1 ? hull_dim_one(pts) : hull_full_dim(pts, d);
}

// Fan volume: cone the triangulated facets over a fixed hull point.
Rat fan_volume(const std::vector<IntVec>& pts, std::size_t d, const HullData& hull) {
    const IntVec& apex = pts[0];
    Int total = 0;
    for (const auto& f : hull.tri_facets) {
        IntMatrix m(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) m(i, j) = pts[f.verts[i]][j] - apex[j];
        total += abs(determinant(m));
    }
    return Rat(total, factorial(d));
}

std::vector<IntVec> dedup_points(std::vector<IntVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

struct SpanCoords {
    IntVec base;
    SublatticeBasis lattice;           // saturated direction lattice
    std::vector<IntVec> coords;        // points in lattice coordinates
};

SpanCoords span_coordinates(const std::vector<IntVec>& pts, std::size_t n) {
    SpanCoords sc;
    sc.base = pts[0];
    IntMatrix diffs(pts.size() - 1, n);
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) diffs(i - 1, j) = pts[i][j] - pts[0][j];
    sc.lattice = saturate(lattice_span(diffs, n));
    if (sc.lattice.rank() == 0) {
        sc.coords.assign(pts.size(), IntVec{});
        return sc;
    }
    SaturatedCoordinates coords(sc.lattice);
    sc.coords.reserve(pts.size());
    for (const IntVec& p : pts) {
        IntVec diff(n);
        for (std::size_t j = 0; j < n; ++j) diff[j] = p[j] - pts[0][j];
        sc.coords.push_back(coords.coords(diff));
    }
    return sc;
}

}  // namespace

Polytope newton_polytope(const SupportSet& a) {
    if (a.points.empty()) throw PreconditionError("newton_polytope: empty support");
    const std::size_t n = a.dim;
    if (a.points.size() == 1) return Polytope{n, 0, {a.points[0]}, {}};

    SpanCoords sc = span_coordinates(a.points, n);
    const std::size_t d = sc.lattice.rank();
    if (d == 0) throw InternalError("newton_polytope: distinct points with zero span");

    HullData hull = hull_of(sc.coords, d);

    Polytope out;
    out.ambient_dim = n;
    out.affine_dim = d;
    for (std::size_t id : hull.vertex_ids) out.vertices.push_back(a.points[id]);
    std::sort(out.vertices.begin(), out.vertices.end());

    SaturatedCoordinates coords(sc.lattice);
    for (const auto& [g, h] : hull.hyperplanes) {
        IntVec lifted = coords.lift_functional(g);
        Int offset = h + dot(lifted, sc.base);
        out.facets.push_back(Facet{std::move(lifted), std::move(offset)});
    }
    std::sort(out.facets.begin(), out.facets.end(),
              [](const Facet& x, const Facet& y) {
                  return std::tie(x.normal, x.offset) < std::tie(y.normal, y.offset);
              });
    return out;
}

Rat volume(const Polytope& p) {
    if (p.affine_dim == 0) return 1;
    SpanCoords sc = span_coordinates(p.vertices, p.ambient_dim);
    HullData hull = hull_of(sc.coords, sc.lattice.rank());
    return fan_volume(sc.coords, sc.lattice.rank(), hull);
}

Rat volume_in_dim(const std::vector<IntVec>& points, std::size_t d) {
    if (points.empty()) throw PreconditionError("volume_in_dim: empty point set");
    if (d == 0) return 1;
    std::vector<IntVec> pts = dedup_points(points);
    if (pts.size() <= d) return 0;  // too few points to span R^d
    SpanCoords sc = span_coordinates(pts, d);
    if (sc.lattice.rank() < d) return 0;
    HullData hull = hull_of(sc.coords, d);
    return fan_volume(sc.coords, d, hull);
}

}  // namespace overdet
