#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "overdet/errors.hpp"
#include "overdet/lattice.hpp"
#include "overdet/smith.hpp"
#include "testutil.hpp"

using namespace overdet;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<IntVec> rv;
    std::size_t cols = 0;
    for (const auto& r : rows) {
        IntVec v;
        for (long x : r) v.push_back(x);
        cols = v.size();
        rv.push_back(std::move(v));
    }
    return IntMatrix::from_rows(rv, cols);
}

SublatticeBasis basis_of(std::initializer_list<std::initializer_list<long>> rows,
                         std::size_t ambient) {
    IntMatrix m = mat(rows);
    return lattice_span(m, ambient);
}

void check_smith_invariants(const IntMatrix& a) {
    SmithDecomposition s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
    CHECK(s.u * s.u_inv == IntMatrix::identity(a.rows()));
    CHECK(s.v * s.v_inv == IntMatrix::identity(a.cols()));
    // diagonal, nonnegative, divisibility chain
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j) {
            if (i != j) CHECK(s.d(i, j) == 0);
        }
    IntVec factors = s.invariant_factors();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        CHECK(factors[i] > 0);
        if (i + 1 < factors.size()) CHECK(factors[i + 1] % factors[i] == 0);
    }
    // zero diagonal entries only after all nonzero ones
    bool seen_zero = false;
    for (std::size_t i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i) {
        if (s.d(i, i) == 0) seen_zero = true;
        if (seen_zero) CHECK(s.d(i, i) == 0);
    }
}

}  // namespace

TEST_CASE("smith normal form on frozen examples") {
    SUBCASE("already diagonal with trivial factors") {
        SmithDecomposition s = smith_normal_form(mat({{1, 0}, {0, 1}}));
        CHECK(s.d == IntMatrix::identity(2));
    }
    SUBCASE("diag(2,3) has invariant factors (1,6)") {
        SmithDecomposition s = smith_normal_form(mat({{2, 0}, {0, 3}}));
        CHECK(s.d(0, 0) == 1);
        CHECK(s.d(1, 1) == 6);
        // oracle: the quotient group Z^2 / (2Z x 3Z) has order 6 and an
        // element of order 6, so it is cyclic: factors must be (1, 6)
        CHECK(testutil::coset_count(mat({{2, 0}, {0, 3}})) == 6);
    }
    SUBCASE("[[2,4],[6,8]] -> diag(2,4)") {
        // d1 = gcd of entries = 2, d1*d2 = |det| = 8
        SmithDecomposition s = smith_normal_form(mat({{2, 4}, {6, 8}}));
        CHECK(s.d(0, 0) == 2);
        CHECK(s.d(1, 1) == 4);
    }
    SUBCASE("zero and empty matrices") {
        SmithDecomposition z = smith_normal_form(IntMatrix(2, 3));
        CHECK(z.d == IntMatrix(2, 3));
        SmithDecomposition e = smith_normal_form(IntMatrix(0, 4));
        CHECK(e.d.rows() == 0);
        CHECK(e.v == IntMatrix::identity(4));
    }
    SUBCASE("deterministic") {
        IntMatrix a = mat({{3, 1, -2}, {0, 4, 5}});
        CHECK(smith_normal_form(a).d == smith_normal_form(a).d);
        CHECK(smith_normal_form(a).u == smith_normal_form(a).u);
    }
}

TEST_CASE("smith invariants on random matrices") {
    testutil::Rng rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        check_smith_invariants(testutil::random_matrix(rng, rows, cols, -9, 9));
    }
}

TEST_CASE("hermite normal form canonicalizes lattices") {
    // two generating sets of the same lattice agree after HNF
    SublatticeBasis a = basis_of({{2, 1}, {0, 3}}, 2);
    SublatticeBasis b = basis_of({{2, 4}, {2, 1}, {4, 2}}, 2);
    CHECK(a == b);
    CHECK(a.rank() == 2);

    // zero generators vanish
    CHECK(basis_of({{0, 0}}, 2).rank() == 0);
}

TEST_CASE("saturation") {
    SUBCASE("already saturated singleton direction") {
        SublatticeBasis g = basis_of({{1, 1}}, 2);
        CHECK(saturate(g) == g);
    }
    SUBCASE("(2,0) saturates to (1,0)") {
        CHECK(saturate(basis_of({{2, 0}}, 2)) == basis_of({{1, 0}}, 2));
    }
    SUBCASE("(2,2) saturates to (1,1)") {
        CHECK(saturate(basis_of({{2, 2}}, 2)) == basis_of({{1, 1}}, 2));
    }
    SUBCASE("idempotent and rank-preserving on random lattices") {
        testutil::Rng rng(7);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 2 + rng() % 3;
            const std::size_t rows = 1 + rng() % n;
            SublatticeBasis g = lattice_span(testutil::random_matrix(rng, rows, n, -6, 6), n);
            SublatticeBasis s = saturate(g);
            CHECK(saturate(s) == s);
            CHECK(s.rank() == g.rank());
            CHECK(is_saturated(s));
            // index of g inside its saturation is finite and 1 iff saturated
            if (g.rank() > 0) {
                Int idx = sublattice_index(g, s);
                CHECK(idx >= 1);
                CHECK((idx == 1) == (g == s));
            }
        }
    }
}

TEST_CASE("sublattice index") {
    SUBCASE("equal lattices have index 1") {
        SublatticeBasis l = basis_of({{1, 0}, {0, 1}}, 2);
        CHECK(sublattice_index(l, l) == 1);
    }
    SUBCASE("(2,0) in (1,0) has index 2") {
        CHECK(sublattice_index(basis_of({{2, 0}}, 2), basis_of({{1, 0}}, 2)) == 2);
    }
    SUBCASE("diag(2,3) in Z^2 has index 6") {
        CHECK(sublattice_index(basis_of({{2, 0}, {0, 3}}, 2), basis_of({{1, 0}, {0, 1}}, 2)) == 6);
    }
    SUBCASE("rank mismatch rejected") {
        CHECK_THROWS_AS(sublattice_index(basis_of({{1, 0}}, 2), basis_of({{1, 0}, {0, 1}}, 2)),
                        PreconditionError);
    }
    SUBCASE("non-sublattice rejected") {
        CHECK_THROWS_AS(sublattice_index(basis_of({{1, 0}}, 2), basis_of({{2, 0}}, 2)),
                        PreconditionError);
        CHECK_THROWS_AS(sublattice_index(basis_of({{0, 1}}, 2), basis_of({{1, 0}}, 2)),
                        PreconditionError);
    }
    SUBCASE("invariant under generating-set changes") {
        testutil::Rng rng(11);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 2 + rng() % 2;
            IntMatrix x = testutil::random_matrix(rng, n, n, -4, 4);
            if (determinant(x) == 0) continue;
            SublatticeBasis l = lattice_span(testutil::random_unimodular(rng, n), n);
            SublatticeBasis g = lattice_span(x * l.basis, n);
            // rebuild both lattices from transformed generator sets
            SublatticeBasis l2 = lattice_span(testutil::random_unimodular(rng, n) * l.basis, n);
            SublatticeBasis g2 = lattice_span(testutil::random_unimodular(rng, n) * g.basis, n);
            CHECK(l2 == l);
            CHECK(g2 == g);
            CHECK(sublattice_index(g, l) == abs(determinant(x)));
        }
    }
}

TEST_CASE("quotient projections") {
    SUBCASE("trivial lattice gives the identity") {
        QuotientProjection p = quotient_projection(SublatticeBasis{2, IntMatrix(0, 2)});
        CHECK(p.matrix == IntMatrix::identity(2));
        CHECK(p.quotient_dim() == 2);
    }
    SUBCASE("full lattice gives the empty projection") {
        QuotientProjection p = quotient_projection(basis_of({{1, 0}, {0, 1}}, 2));
        CHECK(p.matrix.rows() == 0);
        CHECK(p.quotient_dim() == 0);
    }
    SUBCASE("x-axis projects to the second coordinate") {
        QuotientProjection p = quotient_projection(basis_of({{1, 0}}, 2));
        CHECK(p.matrix == mat({{0, 1}}));
        CHECK(apply_projection(p, {Int(7), Int(-3)}) == IntVec{Int(-3)});
    }
    SUBCASE("unsaturated input rejected with advice") {
        CHECK_THROWS_WITH_AS(quotient_projection(basis_of({{2, 0}}, 2)),
                             doctest::Contains("saturate"), PreconditionError);
    }
    SUBCASE("kernel and surjectivity on random saturated lattices") {
        testutil::Rng rng(13);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 2 + rng() % 3;
            const std::size_t rows = 1 + rng() % n;
            SublatticeBasis lam =
                saturate(lattice_span(testutil::random_matrix(rng, rows, n, -5, 5), n));
            QuotientProjection p = quotient_projection(lam);
            CHECK(p.matrix.rows() == n - lam.rank());
            // P kills the lattice
            for (std::size_t i = 0; i < lam.rank(); ++i) {
                IntVec img = apply_projection(p, lam.basis.row(i));
                CHECK(is_zero_vec(img));
            }
            // surjectivity: all invariant factors of P are 1
            if (p.matrix.rows() > 0) {
                for (const Int& f : smith_normal_form(p.matrix).invariant_factors())
                    CHECK(f == 1);
            }
        }
    }
}

TEST_CASE("smith gcd-determinantal invariant on small frozen cases") {
    // product of invariant factors equals the gcd of all maximal minors
    IntMatrix a = mat({{4, 6}, {2, 8}});
    SmithDecomposition s = smith_normal_form(a);
    Int prod = 1;
    for (const Int& f : s.invariant_factors()) prod *= f;
    CHECK(prod == abs(determinant(a)));
}
