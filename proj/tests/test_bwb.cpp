#include <doctest.h>

#include <functional>

#include "cech_p1.hpp"
#include "trgr/bwb.hpp"
#include "trgr/weyl.hpp"

using namespace trgr;

TEST_CASE("rho") {
    CHECK(rho(2) == GLWeight{2, 1});
    CHECK(rho(1) == GLWeight{1});
    CHECK(rho(4) == GLWeight{4, 3, 2, 1});
}

TEST_CASE("sorting with inversion count") {
    auto s = sort_with_length({4, 1});
    REQUIRE(s.has_value());
    CHECK(s->sorted == std::vector<long>{4, 1});
    CHECK(s->inversions == 0);

    s = sort_with_length({0, 1});
    REQUIRE(s.has_value());
    CHECK(s->sorted == std::vector<long>{1, 0});
    CHECK(s->inversions == 1);

    CHECK_FALSE(sort_with_length({3, 3}).has_value());
}

TEST_CASE("line bundles on the projective line") {
    // O(1): degree 0 weight (1,0), two sections.
    auto c = bwb({GLWeight{1}, GLWeight{0}, 2, 1});
    CHECK_FALSE(c.vanishes);
    CHECK(c.degree == 0);
    CHECK(*c.weight == GLWeight{1, 0});
    CHECK(c.dimension == 2);

    // O(-2): one class in degree 1.
    c = bwb({GLWeight{-2}, GLWeight{0}, 2, 1});
    CHECK_FALSE(c.vanishes);
    CHECK(c.degree == 1);
    CHECK(*c.weight == GLWeight{-1, -1});
    CHECK(c.dimension == 1);

    // O(-1): singular weight, everything vanishes.
    CHECK(bwb({GLWeight{-1}, GLWeight{0}, 2, 1}).vanishes);
}

TEST_CASE("chart oracle agreement for O(k)") {
    for (int k = -5; k <= 5; ++k) {
        const auto [h0, h1] = checks::cech_p1_cohomology(k);
        CHECK(h0 == std::max(k + 1, 0));
        CHECK(h1 == std::max(-k - 1, 0));
        const auto c = bwb({GLWeight{k}, GLWeight{0}, 2, 1});
        const Int got_h0 = (!c.vanishes && c.degree == 0) ? c.dimension : Int(0);
        const Int got_h1 = (!c.vanishes && c.degree == 1) ? c.dimension : Int(0);
        CHECK(got_h0 == h0);
        CHECK(got_h1 == h1);
    }
}

TEST_CASE("sections of the coordinate line bundle") {
    for (int n = 2; n <= 8; ++n)
        for (int d = 1; d < n; ++d) {
            const auto c = bwb({GLWeight::constant(1, static_cast<std::size_t>(d)),
                                GLWeight::constant(0, static_cast<std::size_t>(n - d)), n, d});
            REQUIRE_FALSE(c.vanishes);
            CHECK(c.degree == 0);
            CHECK(c.dimension == binomial(n, d));
        }
}

TEST_CASE("twist compatibility") {
    const BundleWeight base{GLWeight{2, 0}, GLWeight{1, 0, -1}, 5, 2};
    const auto c0 = bwb(base);
    for (long t = -3; t <= 3; ++t) {
        const auto ct = bwb({base.a.shifted(t), base.b.shifted(t), base.n, base.d});
        REQUIRE(c0.vanishes == ct.vanishes);
        if (c0.vanishes) continue;
        CHECK(ct.degree == c0.degree);
        CHECK(*ct.weight == c0.weight->shifted(t));
        CHECK(ct.dimension == c0.dimension);
    }
}

namespace {

std::vector<Partition> box_partitions(int rows, long cols) {
    std::vector<Partition> out;
    std::vector<long> cur;
    std::function<void(int, long)> rec = [&](int row, long maxpart) {
        out.emplace_back(cur);
        if (row == rows) return;
        for (long p = 1; p <= maxpart; ++p) {
            cur.push_back(p);
            rec(row + 1, p);
            cur.pop_back();
        }
    };
    rec(0, cols);
    return out;
}

}  // namespace

TEST_CASE("fiberwise pushforward shapes") {
    // Structure sheaf.
    auto p = fiberwise_pushforward(Partition{}, 2, 4);
    REQUIRE(p.has_value());
    CHECK(p->inversions == 0);
    CHECK(p->weight == GLWeight::constant(0, 4));

    // Full box: inversion count r(N-r), layer r^2, determinant weight.
    for (int N = 2; N <= 5; ++N)
        for (int r = 1; r <= N; ++r) {
            const Partition box(std::vector<long>(static_cast<std::size_t>(r), N));
            auto q = fiberwise_pushforward(box, r, N);
            REQUIRE(q.has_value());
            CHECK(q->inversions == static_cast<long>(r) * (N - r));
            CHECK(box.sum() - q->inversions == static_cast<long>(r) * r);
            CHECK(q->weight == GLWeight::constant(-r, static_cast<std::size_t>(N)));
        }

    // One-row shape (N-r+1): lands in layer 1.
    for (int N = 2; N <= 5; ++N)
        for (int r = 1; r <= N; ++r) {
            const Partition lam{static_cast<long>(N - r + 1)};
            auto q = fiberwise_pushforward(lam, r, N);
            REQUIRE(q.has_value());
            CHECK(lam.sum() - q->inversions == 1);
        }
}

TEST_CASE("fiberwise pushforward matches bundle cohomology on the small grassmannian") {
    // The fiber computation for the shape lam is the weight cohomology of
    // the dualized bundle on the Grassmannian of r-planes in N-space: both
    // routes must vanish together and produce the same degree and weight.
    for (int N = 2; N <= 5; ++N)
        for (int r = 1; r <= std::min(N - 1, 3); ++r)
            for (const Partition& lam : box_partitions(r, N)) {
                const auto direct = fiberwise_pushforward(lam, r, N);
                const BundleWeight bundle{
                    GLWeight::from_partition(lam, static_cast<std::size_t>(r)).dual(),
                    GLWeight::constant(0, static_cast<std::size_t>(N - r)), N, r};
                const auto via_bwb = bwb(bundle);
                REQUIRE(direct.has_value() == !via_bwb.vanishes);
                if (!direct) continue;
                CHECK(direct->inversions == via_bwb.degree);
                CHECK(direct->weight == *via_bwb.weight);
            }
}

TEST_CASE("shortcut length equals inversion count") {
    for (int N = 1; N <= 6; ++N)
        for (int r = 1; r <= std::min(N, 3); ++r)
            for (const Partition& lam : box_partitions(r, N)) {
                const auto direct = fiberwise_pushforward(lam, r, N);
                const auto shortcut = shortcut_length(lam, r, N);
                CHECK(direct.has_value() == shortcut.has_value());
                if (direct) CHECK(direct->inversions == *shortcut);
            }
}
