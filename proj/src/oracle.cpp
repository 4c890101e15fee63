#include "overdet/oracle.hpp"

#include <algorithm>
#include <random>

#include "overdet/counting.hpp"
#include "overdet/errors.hpp"
#include "overdet/int_matrix.hpp"

namespace overdet {

namespace {

// Deterministic draws independent of standard-library distribution details.
Int draw_in(std::mt19937_64& rng, const Int& lo, const Int& hi) {
    Int range = hi - lo + 1;
    if (range <= 0) throw InternalError("draw_in: empty range");
    Int acc = 0;
    Int scale = 1;
    // Enough 64-bit words to make the modulo bias negligible.
    std::size_t words = 1;
    for (Int r = range; r > 0; r >>= 64) ++words;
    for (std::size_t i = 0; i < words; ++i) {
        acc += scale * Int(rng());
        scale <<= 64;
    }
    return lo + Int(acc % range);
}

std::uint64_t draw_index(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace

ConsistentSample sample_consistent_system(const Collection& c, std::uint64_t seed,
                                          const Int& coeff_bound) {
    if (coeff_bound < 1) throw PreconditionError("coefficient bound must be positive");
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c.supports[i].points.size() < 2)
            throw PreconditionError(
                "support " + std::to_string(i + 1) +
                " is a single monomial; it cannot vanish at a torus point with a nonzero "
                "coefficient, so consistent samples only exist off the zero section");
    }

    std::mt19937_64 rng(seed);
    ConsistentSample out;
    out.seed = seed;
    out.witness.reserve(c.n);
    for (std::size_t i = 0; i < c.n; ++i) out.witness.push_back(Rat(draw_in(rng, 1, coeff_bound)));

    for (const SupportSet& a : c.supports) {
        std::map<IntVec, Rat> terms;
        Rat partial = 0;
        for (std::size_t p = 0; p + 1 < a.points.size(); ++p) {
            Rat coeff(draw_in(rng, -coeff_bound, coeff_bound));
            if (coeff == 0) continue;
            terms[a.points[p]] = coeff;
            Rat mono = coeff;
            for (std::size_t i = 0; i < c.n; ++i)
                mono *= rat_pow(out.witness[i], a.points[p][i].convert_to<long>());
            partial += mono;
        }
        // Solve the last coefficient from f(witness) = 0.
        const IntVec& last = a.points.back();
        Rat mono = 1;
        for (std::size_t i = 0; i < c.n; ++i)
            mono *= rat_pow(out.witness[i], last[i].convert_to<long>());
        Rat solved = -partial / mono;
        if (solved != 0) terms[last] = solved;
        out.system.push_back(make_laurent(c.n, std::move(terms)));
    }
    return out;
}

std::vector<LaurentPoly> sample_generic_system(const Collection& c, std::uint64_t seed,
                                               const Int& coeff_bound) {
    if (coeff_bound < 1) throw PreconditionError("coefficient bound must be positive");
    std::mt19937_64 rng(seed);
    std::vector<LaurentPoly> out;
    for (const SupportSet& a : c.supports) {
        std::map<IntVec, Rat> terms;
        for (const IntVec& p : a.points) {
            Int coeff = 0;
            while (coeff == 0) coeff = draw_in(rng, -coeff_bound, coeff_bound);
            terms[p] = Rat(coeff);
        }
        out.push_back(make_laurent(c.n, std::move(terms)));
    }
    return out;
}

namespace {

// Laurent polynomial in one variable -> ordinary polynomial with nonzero
// constant term (divide by the lowest power of x; torus roots unchanged).
QPoly univariate_normalize(const LaurentPoly& f) {
    if (f.terms.empty()) return QPoly();
    const Int lo = f.terms.begin()->first[0];
    const Int hi = f.terms.rbegin()->first[0];
    std::vector<Rat> coeffs(static_cast<std::size_t>(Int(hi - lo).convert_to<long>()) + 1, Rat(0));
    for (const auto& [exp, c] : f.terms)
        coeffs[static_cast<std::size_t>(Int(exp[0] - lo).convert_to<long>())] = c;
    return QPoly(std::move(coeffs));
}

}  // namespace

std::size_t count_common_roots_univariate(const std::vector<LaurentPoly>& system) {
    QPoly g;
    bool any = false;
    for (const LaurentPoly& f : system) {
        if (f.dim != 1)
            throw PreconditionError("count_common_roots_univariate: system is not univariate");
        if (f.is_zero()) continue;
        any = true;
        g = g.is_zero() ? univariate_normalize(f) : poly_gcd(g, univariate_normalize(f));
        if (g.degree() == 0) return 0;
    }
    if (!any)
        throw PreconditionError("count_common_roots_univariate: all polynomials are zero");
    return distinct_nonzero_roots(g);
}

namespace {

// ---- bivariate elimination ------------------------------------------------

// Element of Z[X], coefficients ascending.
using ZXPoly = std::vector<Int>;

long zx_degree(const ZXPoly& p) {
    long d = static_cast<long>(p.size()) - 1;
    while (d >= 0 && p[static_cast<std::size_t>(d)] == 0) --d;
    return d;
}

Int zx_eval(const ZXPoly& p, const Int& x) {
    Int acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// f in Z[X][Y]: coefficient polynomials by ascending Y-degree.
struct BivarPoly {
    std::vector<ZXPoly> coeffs;

    long y_degree() const {
        long d = static_cast<long>(coeffs.size()) - 1;
        while (d >= 0 && zx_degree(coeffs[static_cast<std::size_t>(d)]) < 0) --d;
        return d;
    }
    long x_degree() const {
        long m = -1;
        for (const ZXPoly& c : coeffs) m = std::max(m, zx_degree(c));
        return m;
    }
};

// Apply the exponent shear (u, v) -> (u, s*u + v), then shift both exponents
// to be nonnegative and clear denominators. Torus roots map bijectively.
BivarPoly shear_and_clear(const LaurentPoly& f, long s) {
    Int min_u = 0, min_w = 0;
    bool first = true;
    std::map<std::pair<Int, Int>, Rat> sheared;
    for (const auto& [exp, c] : f.terms) {
        Int u = exp[0];
        Int w = Int(s) * exp[0] + exp[1];
        sheared[{u, w}] = c;
        if (first || u < min_u) min_u = u;
        if (first || w < min_w) min_w = w;
        first = false;
    }
    Int den_lcm = 1;
    for (const auto& [e, c] : sheared) den_lcm = lcm(den_lcm, denominator(c));

    long max_w = 0;
    for (const auto& [e, c] : sheared)
        max_w = std::max(max_w, Int(e.second - min_w).convert_to<long>());
    BivarPoly out;
    out.coeffs.assign(static_cast<std::size_t>(max_w) + 1, ZXPoly{});
    for (const auto& [e, c] : sheared) {
        const std::size_t uu = static_cast<std::size_t>(Int(e.first - min_u).convert_to<long>());
        const std::size_t ww = static_cast<std::size_t>(Int(e.second - min_w).convert_to<long>());
        ZXPoly& row = out.coeffs[ww];
        if (row.size() <= uu) row.resize(uu + 1, Int(0));
        row[uu] = numerator(c) * (den_lcm / denominator(c));
    }
    return out;
}

// The shear parameter must give every support a unique maximal and minimal
// value of s*u + v, which makes the extreme Y-coefficients monomials in X
// (nonvanishing away from X = 0, so specialization never drops the Y-degree
// and Y = 0 is never a root).
bool shear_valid(const std::vector<LaurentPoly>& system, long s) {
    for (const LaurentPoly& f : system) {
        if (f.is_zero()) continue;
        std::map<Int, int> hits;
        Int best_max = 0, best_min = 0;
        bool first = true;
        for (const auto& [exp, c] : f.terms) {
            Int w = Int(s) * exp[0] + exp[1];
            if (first) {
                best_max = best_min = w;
                first = false;
            } else {
                if (w > best_max) best_max = w;
                if (w < best_min) best_min = w;
            }
            hits[w] += 1;
        }
        if (hits[best_max] != 1 || hits[best_min] != 1) return false;
    }
    return true;
}

// Sylvester resultant with respect to Y, computed by evaluation at integer
// points and exact interpolation. Specializations at X = t != 0 are safe
// because the extreme Y-coefficients are monomials.
QPoly resultant_y(const BivarPoly& p, const BivarPoly& q) {
    const long dp = p.y_degree(), dq = q.y_degree();
    if (dp < 0 || dq < 0) throw InternalError("resultant_y: zero polynomial");
    if (dp == 0 && dq == 0) return QPoly::constant(Rat(1));
    if (dp == 0) {
        // Res(p, q) = p^dq up to sign; only the roots matter downstream.
        std::vector<Rat> cs;
        for (const Int& c : p.coeffs[0]) cs.push_back(Rat(c));
        return QPoly(std::move(cs));
    }
    if (dq == 0) {
        std::vector<Rat> cs;
        for (const Int& c : q.coeffs[0]) cs.push_back(Rat(c));
        return QPoly(std::move(cs));
    }

    const long bound = dq * std::max(p.x_degree(), 0L) + dp * std::max(q.x_degree(), 0L);
    std::vector<Rat> xs, ys;
    Int t = 0;
    for (long i = 0; i <= bound; ++i) {
        // nonzero evaluation points: 1, -1, 2, -2, ...
        if (t > 0)
            t = -t;
        else
            t = -t + 1;
        const std::size_t size = static_cast<std::size_t>(dp + dq);
        IntMatrix syl(size, size);
        for (long r = 0; r < dq; ++r)
            for (long c = 0; c <= dp; ++c)
                syl(static_cast<std::size_t>(r), static_cast<std::size_t>(r + c)) =
                    zx_eval(p.coeffs[static_cast<std::size_t>(dp - c)], t);
        for (long r = 0; r < dp; ++r)
            for (long c = 0; c <= dq; ++c)
                syl(static_cast<std::size_t>(dq + r), static_cast<std::size_t>(r + c)) =
                    zx_eval(q.coeffs[static_cast<std::size_t>(dq - c)], t);
        xs.push_back(Rat(t));
        ys.push_back(Rat(determinant(syl)));
    }
    return interpolate(xs, ys);
}

}  // namespace

std::size_t count_common_roots_bivariate(const std::vector<LaurentPoly>& system,
                                         std::uint64_t seed) {
    if (system.size() < 2)
        throw PreconditionError("count_common_roots_bivariate: need at least two polynomials");
    std::vector<LaurentPoly> polys;
    for (const LaurentPoly& f : system) {
        if (f.dim != 2)
            throw PreconditionError("count_common_roots_bivariate: system is not bivariate");
        if (!f.is_zero()) polys.push_back(f);
    }
    if (polys.empty())
        throw PreconditionError("count_common_roots_bivariate: all polynomials are zero");
    // A single monomial never vanishes on the torus.
    for (const LaurentPoly& f : polys) {
        if (f.terms.size() == 1) return 0;
    }
    if (polys.size() == 1)
        throw PreconditionError(
            "count_common_roots_bivariate: zero set is a curve (only one nonzero polynomial)");

    // Seeded shear: pick among the first few valid parameters.
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<long> valid;
    for (long s = 1; valid.size() < 3 && s < 1000; ++s) {
        if (shear_valid(polys, s)) valid.push_back(s);
    }
    if (valid.empty()) throw InternalError("no valid shear parameter found");
    const long s = valid[draw_index(rng, valid.size())];

    std::vector<BivarPoly> sheared;
    for (const LaurentPoly& f : polys) sheared.push_back(shear_and_clear(f, s));

    // Y-free polynomials impose direct conditions on X; the rest are
    // star-paired with the member of smallest Y-degree.
    std::vector<std::size_t> y_free, y_having;
    for (std::size_t i = 0; i < sheared.size(); ++i) {
        if (sheared[i].y_degree() == 0)
            y_free.push_back(i);
        else
            y_having.push_back(i);
    }

    std::vector<QPoly> eliminants;
    for (std::size_t i : y_free) {
        std::vector<Rat> cs;
        for (const Int& c : sheared[i].coeffs[0]) cs.push_back(Rat(c));
        eliminants.emplace_back(std::move(cs));
    }
    if (y_having.size() == 1 && y_free.empty())
        throw PreconditionError("count_common_roots_bivariate: zero set is a curve");
    if (y_having.size() >= 2) {
        std::size_t center = y_having[0];
        for (std::size_t i : y_having) {
            if (sheared[i].y_degree() < sheared[center].y_degree()) center = i;
        }
        std::size_t resultants_kept = 0;
        bool degenerate_pair = false;
        for (std::size_t i : y_having) {
            if (i == center) continue;
            QPoly r = resultant_y(sheared[center], sheared[i]);
            if (r.is_zero()) {
                degenerate_pair = true;
            } else {
                ++resultants_kept;
                eliminants.push_back(std::move(r));
            }
        }
        if (degenerate_pair) {
            // Some pair shares a curve; fall back to the remaining pairs.
            for (std::size_t a = 0; a < y_having.size(); ++a)
                for (std::size_t b = a + 1; b < y_having.size(); ++b) {
                    if (y_having[a] == center || y_having[b] == center) continue;
                    QPoly r = resultant_y(sheared[y_having[a]], sheared[y_having[b]]);
                    if (!r.is_zero()) {
                        ++resultants_kept;
                        eliminants.push_back(std::move(r));
                    }
                }
            if (resultants_kept == 0)
                throw PreconditionError(
                    "count_common_roots_bivariate: non-finite zero set (identically vanishing "
                    "eliminants after shear)");
        }
    }
    if (eliminants.empty())
        throw PreconditionError(
            "count_common_roots_bivariate: non-finite zero set (no eliminant constraints)");

    QPoly g;
    for (const QPoly& e : eliminants) g = g.is_zero() ? e : poly_gcd(g, e);
    if (g.is_zero()) throw InternalError("bivariate eliminant gcd is zero");
    if (g.degree() == 0) return 0;
    return distinct_nonzero_roots(g);
}

VerificationReport verify_count(const Collection& c, std::size_t trials, std::uint64_t seed,
                                const Int& coeff_bound, std::size_t cap) {
    if (c.n > 2)
        throw PreconditionError("verify_count: exact elimination oracle only covers n <= 2");
    CountReport predicted = overdetermined_count(c, cap);

    VerificationReport out;
    out.predicted = predicted.predicted_count;
    std::size_t agree = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = seed + t;
        ConsistentSample sample = sample_consistent_system(c, trial_seed, coeff_bound);
        std::size_t count = c.n == 1 ? count_common_roots_univariate(sample.system)
                                     : count_common_roots_bivariate(sample.system, trial_seed);
        if (Int(count) == out.predicted) ++agree;
        out.trials.emplace_back(trial_seed, count);
    }
    out.agreement_fraction = trials == 0 ? Rat(0) : Rat(Int(agree), Int(trials));
    return out;
}

}  // namespace overdet
