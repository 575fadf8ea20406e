#include <doctest.h>

#include "trgr/fibers.hpp"
#include "trgr/index_set.hpp"
#include "trgr/json_io.hpp"
#include "trgr/plucker.hpp"
#include "trgr/rng.hpp"
#include "trgr/vanish.hpp"

using namespace trgr;

TEST_CASE("cell intersections") {
    const IndexSet J({1, 4, 5}, 6, 3);  // degree 2
    REQUIRE(J.degree() == 2);

    CHECK(cell_intersection(J, 3).stratum == CellStratum::Empty);
    CHECK(cell_intersection(J, 3).dimension == -1);

    const auto affine = cell_intersection(J, 2);
    CHECK(affine.stratum == CellStratum::Affine);
    CHECK(affine.dimension == 3 * 3 - 4);

    const auto det = cell_intersection(J, 1);
    CHECK(det.stratum == CellStratum::Determinantal);
    CHECK(det.dimension == 3 * 3 - 1);

    // Codimension r^2 for every index set with large enough degree.
    for (int n = 4; n <= 8; ++n)
        for (int d = 2; d <= n - d; ++d)
            for (const IndexSet& I : enumerate_index_sets(n, d, std::min(d, n - d)))
                for (int r = 0; r <= I.degree(); ++r)
                    CHECK(cell_intersection(I, r).dimension ==
                          static_cast<long>(d) * (n - d) - static_cast<long>(r) * r);
}

TEST_CASE("fiber classifier") {
    // Single r: the collineation of exterior degree m + 1 - r.
    CHECK(fiber_classifier(3, {2}, 3).s_list == std::vector<int>{2});
    CHECK(fiber_classifier(2, {2}, 3).s_list == std::vector<int>{1});
    // Below the first center the fiber is a point.
    CHECK(fiber_classifier(1, {2, 3}, 3).s_list.empty());
    CHECK(fiber_classifier(0, {2}, 2).s_list.empty());
    // Mixed chain keeps one s per active center, increasing.
    CHECK(fiber_classifier(3, {2, 3}, 3).s_list == std::vector<int>{1, 2});
    CHECK_THROWS(fiber_classifier(2, {1, 2}, 3));  // r values start above 1
    CHECK_THROWS(fiber_classifier(4, {2}, 3));     // m beyond d
}

TEST_CASE("orbit points") {
    // z = 0: the base point of the orbit in every component.
    const RationalMatrix zero(3, 2);  // (n, d) = (5, 2)
    const OrbitPoint base = orbit_point(zero, {2});
    CHECK(base.base.coord({1, 2}) == 1);
    CHECK(base.base.is_zero() == false);
    for (std::size_t i = 0; i < base.base.index.size(); ++i)
        if (base.base.index[i].elements() != std::vector<int>{1, 2})
            CHECK(base.base.coords[i] == 0);
    REQUIRE(base.components.size() == 1);
    CHECK(base.components[0].level == 1);
    CHECK(base.components[0].coord({1, 2}) == 1);

    // Components are truncations of the base from the same matrix, and the
    // degree-zero coordinate never vanishes on the orbit.
    SeededRng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        RationalMatrix z(3, 2);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 2; ++j) z.at(i, j) = rng.small_entry();
        const OrbitPoint pt = orbit_point(z, {2});
        CHECK(pt.base.coord({1, 2}) == 1);
        for (const PluckerVector& comp : pt.components)
            for (std::size_t i = 0; i < comp.index.size(); ++i)
                CHECK(comp.coords[i] == pt.base.coord(comp.index[i].elements()));
    }
}

TEST_CASE("exceptional probe over the deepest point") {
    const auto U = RationalMatrix::from_ints(4, 2, {0, 0, 0, 0, 1, 0, 0, 1});
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const auto probe = exceptional_probe(U, 2, 20, seed);
        CHECK(probe.proj_dim == 3);
        CHECK(probe.curves.size() >= 20);
        // Limits stay inside the degree-one coordinate block.
        const auto index = enumerate_index_sets(4, 2, 1);
        for (const auto& c : probe.curves)
            for (std::size_t i = 0; i < index.size(); ++i)
                if (index[i].degree() == 0) CHECK(c.limit[i] == 0);
        // Report serialization carries the inputs and the verdict.
        const auto json = to_json(probe);
        CHECK(json.find("\"proj_dim\":3") != std::string::npos);
    }

    // Off-center points are rejected.
    RationalMatrix top(4, 2);
    top.at(0, 0) = 1;
    top.at(1, 1) = 1;
    CHECK_THROWS(exceptional_probe(top, 2, 5, 1));
}

TEST_CASE("exceptional probe dimensions match the classifier") {
    // Over a point with intersection dimension m, the single-center fiber is
    // the collineation space with s = m - r + 1; for r = 2 that is a
    // projective space of dimension m^2 - 1 and limit spans reach it.
    for (std::uint64_t seed : {1ULL, 2ULL}) {
        const auto U = sample_schubert(5, 2, 2, 2, seed);
        const auto probe = exceptional_probe(U, 2, 24, seed);
        CHECK(probe.proj_dim == 3);  // m = 2
    }
}

TEST_CASE("exceptional probe over the deepest stratum of a bigger grassmannian") {
    // m = d = 3: the fiber of the second blow-up is a projective space of
    // dimension m^2 - 1 = 8 and the limits fill the degree-one block.
    RationalMatrix U(6, 3);
    U.at(3, 0) = 1;
    U.at(4, 1) = 1;
    U.at(5, 2) = 1;
    const auto probe = exceptional_probe(U, 2, 30, 7);
    CHECK(probe.proj_dim == 8);
}

TEST_CASE("third center probe lands in the top degree block") {
    RationalMatrix U(6, 3);
    U.at(3, 0) = 1;
    U.at(4, 1) = 1;
    U.at(5, 2) = 1;
    const auto probe = exceptional_probe(U, 3, 30, 11);
    CHECK(probe.proj_dim == 8);
    // Coordinates of degree below r - 1 vanish on every limit.
    const auto index = enumerate_index_sets(6, 3, 2);
    for (const auto& c : probe.curves)
        for (std::size_t i = 0; i < index.size(); ++i)
            if (index[i].degree() < 2) CHECK(c.limit[i] == 0);
}

TEST_CASE("quadratic fallback on a single-coordinate truncation") {
    // The projective line with its single truncated coordinate: every limit
    // is the same point, the fallback fires, and the fiber is a point.
    RationalMatrix U(2, 1);
    U.at(1, 0) = 1;
    const auto probe = exceptional_probe(U, 1, 6, 2);
    CHECK(probe.quadratic_fallback);
    CHECK(probe.proj_dim == 0);
}

TEST_CASE("smoothness spot check") {
    const auto rep = smoothness_probe(4, 2, 20, 1);
    CHECK(rep.expected_rank == 4);
    CHECK(rep.pass);
    bool saw_exceptional = false;
    for (const auto& s : rep.samples) {
        CHECK(s.rank == 4);
        saw_exceptional = saw_exceptional || s.on_exceptional;
    }
    CHECK(saw_exceptional);

    // Projective space is smooth and the chart has constant full rank.
    const auto line = smoothness_probe(5, 1, 5, 2);
    CHECK(line.expected_rank == 4);
    CHECK(line.pass);

    // A case with a nonzero complementary block in the chart.
    const auto odd = smoothness_probe(5, 2, 10, 3);
    CHECK(odd.expected_rank == 6);
    CHECK(odd.pass);

    const auto json = to_json(rep);
    CHECK(json.find("\"pass\":true") != std::string::npos);
    CHECK_THROWS(smoothness_probe(10, 4, 5, 1));  // beyond desk scale
}
