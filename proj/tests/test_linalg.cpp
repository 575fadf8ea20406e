#include <doctest.h>

#include <array>

#include "trgr/curves.hpp"
#include "trgr/json_io.hpp"
#include "trgr/matrix.hpp"
#include "trgr/plucker.hpp"
#include "trgr/poly.hpp"
#include "trgr/rng.hpp"

using namespace trgr;

namespace {

RationalMatrix random_matrix(std::size_t rows, std::size_t cols, SeededRng& rng) {
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.small_entry();
    return m;
}

}  // namespace

TEST_CASE("minors") {
    const auto id = RationalMatrix::identity(3);
    CHECK(minor_det(id, {0, 1}, {0, 1}) == 1);
    CHECK(minor_det(id, {0, 0}, {0, 1}) == 0);  // repeated row
    const auto m = RationalMatrix::from_ints(2, 2, {1, 2, 3, 4});
    CHECK(minor_det(m, {0, 1}, {0, 1}) == -2);
    CHECK_THROWS(minor_det(m, {0}, {0, 1}));
    CHECK_THROWS(minor_det(m, {0, 5}, {0, 1}));
}

TEST_CASE("kernel and rank") {
    const auto m = RationalMatrix::from_ints(2, 3, {1, 2, 3, 2, 4, 6});
    CHECK(m.rank() == 1);
    const auto ker = m.kernel();
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker)
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Rat dot = 0;
            for (std::size_t j = 0; j < m.cols(); ++j) dot += m.at(i, j) * v[j];
            CHECK(dot == 0);
        }
}

TEST_CASE("plucker coordinates") {
    // Identity d-plane: only the top coordinate.
    RationalMatrix e(4, 2);
    e.at(0, 0) = 1;
    e.at(1, 1) = 1;
    const PluckerVector w = plucker(e, 2);
    CHECK(w.coord({1, 2}) == 1);
    CHECK(w.coord({1, 3}) == 0);
    CHECK(w.coord({3, 4}) == 0);

    // Columns e1 + e3 and e2.
    const auto z = RationalMatrix::from_ints(4, 2, {1, 0, 0, 1, 1, 0, 0, 0});
    const PluckerVector v = plucker(z, 2);
    CHECK(v.coord({1, 2}) == 1);
    CHECK(v.coord({2, 3}) == -1);
    CHECK(v.coord({1, 3}) == 0);
    CHECK(v.coord({1, 4}) == 0);
    CHECK(v.coord({2, 4}) == 0);
    CHECK(v.coord({3, 4}) == 0);

    CHECK_THROWS(plucker(RationalMatrix(4, 2), 2));  // rank deficient
}

TEST_CASE("grassmann quadric for random planes") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        SeededRng rng(seed);
        for (int trial = 0; trial < 20; ++trial) {
            RationalMatrix z = random_matrix(4, 2, rng);
            if (z.rank() != 2) continue;
            const PluckerVector p = plucker(z, 2);
            CHECK(p.coord({1, 2}) * p.coord({3, 4}) - p.coord({1, 3}) * p.coord({2, 4}) +
                      p.coord({1, 4}) * p.coord({2, 3}) ==
                  0);
        }
        // Three-term relations on the next Grassmannian.
        for (int trial = 0; trial < 10; ++trial) {
            RationalMatrix z = random_matrix(5, 2, rng);
            if (z.rank() != 2) continue;
            const PluckerVector p = plucker(z, 2);
            const std::vector<std::array<int, 4>> quadruples{
                {1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 4, 5}, {1, 3, 4, 5}, {2, 3, 4, 5}};
            for (const auto& [a, b, c, d] : quadruples)
                CHECK(p.coord({a, b}) * p.coord({c, d}) - p.coord({a, c}) * p.coord({b, d}) +
                          p.coord({a, d}) * p.coord({b, c}) ==
                      0);
        }
    }
}

TEST_CASE("unipotent group") {
    SeededRng rng(7);
    const auto z = random_matrix(3, 2, rng);
    const auto z2 = random_matrix(3, 2, rng);
    CHECK(unipotent(RationalMatrix(3, 2)) == RationalMatrix::identity(5));
    auto sum = RationalMatrix(3, 2);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) sum.at(i, j) = z.at(i, j) + z2.at(i, j);
    CHECK(unipotent(z) * unipotent(z2) == unipotent(sum));
    CHECK(unipotent(z).det() == 1);
}

TEST_CASE("intersection dimension") {
    RationalMatrix e(5, 2);
    e.at(0, 0) = 1;
    e.at(1, 1) = 1;
    CHECK(intersection_dim(e) == 0);
    CHECK_FALSE(schubert_member(e, 1));

    for (int r = 0; r <= 2; ++r) {
        RationalMatrix p(6, 2);
        // Basis of the fixed point attached to I(r).
        int col = 0;
        for (int i = 1; i <= 2 - r; ++i) p.at(static_cast<std::size_t>(i - 1), col++) = 1;
        for (int i = 3; i <= 2 + r; ++i) p.at(static_cast<std::size_t>(i - 1), col++) = 1;
        CHECK(intersection_dim(p) == r);
    }

    RationalMatrix bottom(6, 2);
    bottom.at(3, 0) = 1;
    bottom.at(5, 1) = 1;
    CHECK(intersection_dim(bottom) == 2);
    CHECK(schubert_member(bottom, 2));

    // Invariance under right multiplication by an invertible matrix.
    SeededRng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto U = sample_schubert(6, 3, 1, 2, 100 + static_cast<std::uint64_t>(trial));
        RationalMatrix g(3, 3);
        do {
            g = random_matrix(3, 3, rng);
        } while (g.det() == 0);
        CHECK(intersection_dim(U) == 2);
        CHECK(intersection_dim(U * g) == 2);
    }
}

TEST_CASE("subspace point equality is span equality") {
    SeededRng rng(13);
    const auto U = sample_schubert(5, 2, 0, 1, 21);
    RationalMatrix g(2, 2);
    do {
        g = random_matrix(2, 2, rng);
    } while (g.det() == 0);
    CHECK(same_column_span(U, U * g));
    const auto W = sample_schubert(5, 2, 0, 0, 22);
    CHECK_FALSE(same_column_span(U, W));
}

TEST_CASE("everything belongs to the zeroth stratum") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
        CHECK(schubert_member(sample_schubert(6, 3, 0, static_cast<int>(seed) % 4, seed), 0));
}

TEST_CASE("seeded schubert samples") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        for (int m = 0; m <= 3; ++m) {
            const auto U = sample_schubert(7, 3, 0, m, seed);
            CHECK(intersection_dim(U) == m);
        }
        // Determinism per seed.
        CHECK(sample_schubert(6, 2, 1, 1, seed) == sample_schubert(6, 2, 1, 1, seed));
        // Membership in the target stratum but not the next one.
        const auto U = sample_schubert(6, 3, 1, 1, seed);
        CHECK(schubert_member(U, 1));
        CHECK_FALSE(schubert_member(U, 2));
    }
    CHECK_THROWS(sample_schubert(6, 3, 2, 4, 1));  // m > d
}

TEST_CASE("collineation coordinates") {
    const auto id = RationalMatrix::identity(3);
    const auto blocks = collineation_point(id, {1, 2});
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].size() == 9);
    CHECK(blocks[1].size() == 9);
    // Identity: indicator of equal row and column subsets.
    for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(blocks[b][i * 3 + j] == (i == j ? 1 : 0));

    // m = 2, s = 1: the four entries themselves.
    const auto m2 = RationalMatrix::from_ints(2, 2, {1, 2, 3, 4});
    const auto entries = collineation_point(m2, {1});
    CHECK(entries[0] == std::vector<Rat>{1, 2, 3, 4});

    // Scaling phi by c multiplies the s-block by c^s.
    SeededRng rng(9);
    RationalMatrix phi(3, 3);
    do {
        phi = random_matrix(3, 3, rng);
    } while (phi.rank() != 3);
    RationalMatrix phi2 = phi;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) phi2.at(i, j) *= 5;
    const auto a = collineation_point(phi, {1, 2, 3});
    const auto b = collineation_point(phi2, {1, 2, 3});
    for (std::size_t s = 0; s < 3; ++s) {
        Rat scale = 1;
        for (std::size_t e = 0; e <= s; ++e) scale *= 5;
        for (std::size_t k = 0; k < a[s].size(); ++k) CHECK(b[s][k] == a[s][k] * scale);
    }

    CHECK_THROWS(collineation_point(RationalMatrix(2, 2), {1}));  // rank deficient
}

TEST_CASE("limits along curves") {
    // Constant curve: its own coordinates.
    const auto c = PolyCurve::line(RationalMatrix::from_ints(2, 1, {3, 4}), RationalMatrix(2, 1));
    std::vector<UniPoly> coords{c.at(0, 0), c.at(1, 0)};
    const auto lim = limit_point(coords);
    CHECK(lim.valuation == 0);
    CHECK(lim.point == std::vector<Rat>{3, 4});

    // Scalar scaling drops out: the entries of t*Id as s = 1 minors.
    std::vector<UniPoly> scaled{{Rat(0), Rat(1)}, {}, {}, {Rat(0), Rat(1)}};
    const auto lim2 = limit_point(scaled);
    CHECK(lim2.valuation == 1);
    CHECK(lim2.point == std::vector<Rat>{1, 0, 0, 1});

    CHECK_THROWS(limit_point(std::vector<UniPoly>{{}, {}}));
}

TEST_CASE("limits are projectively invariant under curve rescaling") {
    SeededRng rng(17);
    RationalMatrix U(4, 2), D(4, 2);
    U.at(2, 0) = 1;
    U.at(3, 1) = 1;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 2; ++j) D.at(i, j) = rng.small_entry();
    const auto curve = PolyCurve::line(U, D);
    const auto coords = curve_plucker(curve, 1);
    const UniPoly scale{Rat(2), Rat(-3), Rat(1)};  // nonzero at t = 0
    std::vector<UniPoly> scaled;
    for (const auto& c : coords) scaled.push_back(upoly_mul(scale, c));
    const auto a = limit_point(coords);
    const auto b = limit_point(scaled);
    // b = 2a exactly, so they agree projectively.
    REQUIRE(a.point.size() == b.point.size());
    for (std::size_t i = 0; i < a.point.size(); ++i) CHECK(b.point[i] == a.point[i] * 2);

    // Scaling by a power of t shifts the valuation only.
    std::vector<UniPoly> shifted;
    for (const auto& c : coords) shifted.push_back(upoly_mul(UniPoly{Rat(0), Rat(1)}, c));
    const auto c2 = limit_point(shifted);
    CHECK(c2.valuation == a.valuation + 1);
    CHECK(c2.point == a.point);
}

TEST_CASE("degree grading of orbit coordinates") {
    // Delta_I of a unipotent translate of the base point is a polynomial of
    // total degree deg I in the matrix entries: checked symbolically.
    const int n = 5, d = 2;
    auto ring = PolyRing::standard((n - d) * d, "z");
    std::vector<std::vector<MultiPoly>> Z(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) {
            MultiPoly entry(ring);
            if (i == j) entry = MultiPoly::constant(ring, 1);
            if (i >= d)
                entry = MultiPoly::variable(ring, static_cast<std::size_t>((i - d) * d + j));
            Z[static_cast<std::size_t>(i)].push_back(entry);
        }
    for (const IndexSet& I : enumerate_index_sets(n, d, d)) {
        std::vector<int> rows;
        for (int e : I.elements()) rows.push_back(e - 1);
        const MultiPoly delta = poly_minor(Z, rows, {0, 1}, ring);
        CHECK(delta.degree() == I.degree());
    }
}

TEST_CASE("matrix json round trip") {
    const auto m = RationalMatrix::from_ints(2, 3, {1, -2, 3, 4, 5, -6});
    auto j = to_json(m);
    CHECK(matrix_from_json(j) == m);
    RationalMatrix q(1, 2);
    q.at(0, 0) = Rat(1, 3);
    q.at(0, 1) = Rat(-7, 2);
    CHECK(to_json(q) == "[[\"1/3\",\"-7/2\"]]");
    CHECK(matrix_from_json(to_json(q)) == q);
}
