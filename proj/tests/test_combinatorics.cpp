#include <doctest.h>

#include <algorithm>
#include <functional>

#include "trgr/index_set.hpp"
#include "trgr/partition.hpp"
#include "trgr/rng.hpp"
#include "trgr/weyl.hpp"

using namespace trgr;

namespace {

std::vector<Partition> partitions_up_to(long max_sum, int max_parts) {
    std::vector<Partition> out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long remaining, long maxpart) {
        out.emplace_back(cur);
        if (remaining == 0 || static_cast<int>(cur.size()) == max_parts) return;
        for (long p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(max_sum, max_sum);
    return out;
}

}  // namespace

TEST_CASE("partition transpose") {
    CHECK(Partition{3, 1}.transpose() == Partition{2, 1, 1});
    CHECK(Partition{}.transpose() == Partition{});
    CHECK(Partition{2, 2}.transpose() == Partition{2, 2});
    CHECK(Partition{3, 1, 0, 0} == Partition{3, 1});
    CHECK_THROWS(Partition{1, 2});

    for (const Partition& lam : partitions_up_to(8, 8)) {
        CHECK(lam.transpose().transpose() == lam);
        CHECK(lam.transpose().sum() == lam.sum());
    }
}

TEST_CASE("weight duality and reduction") {
    CHECK(GLWeight{2, 0}.dual() == GLWeight{0, -2});
    CHECK(GLWeight{1, 1, 1}.dual() == GLWeight{-1, -1, -1});
    CHECK(GLWeight::constant(0, 4).dual() == GLWeight::constant(0, 4));
    CHECK(GLWeight{2, 0}.dual().dual() == GLWeight{2, 0});

    CHECK(GLWeight::constant(7, 3).sl_reduced() == GLWeight::constant(0, 3));
    CHECK(GLWeight{2, 1, 0}.sl_reduced() == GLWeight{2, 1, 0});
    CHECK(GLWeight{0, -1, -1}.sl_reduced() == GLWeight{1, 0, 0});
}

TEST_CASE("index set degree") {
    const IndexSet top({1, 2}, 4, 2);
    CHECK(top.degree() == 0);
    CHECK(schubert_index_set(6, 3, 2).elements() == std::vector<int>{1, 4, 5});
    CHECK(schubert_index_set(6, 3, 2).degree() == 2);
    CHECK(IndexSet({3, 4}, 4, 2).degree() == 2);

    // degree(I) + |I cap [d]| = d
    for (const IndexSet& I : enumerate_index_sets(7, 3, 3)) {
        long low = static_cast<long>(
            std::count_if(I.elements().begin(), I.elements().end(),
                          [&](int e) { return e <= I.d(); }));
        CHECK(I.degree() + low == I.d());
    }
}

TEST_CASE("index set enumeration and truncated dimensions") {
    REQUIRE(enumerate_index_sets(4, 2, 0).size() == 1);
    CHECK(enumerate_index_sets(4, 2, 0)[0].elements() == std::vector<int>{1, 2});
    CHECK(enumerate_index_sets(4, 2, 1).size() == 5);
    CHECK(enumerate_index_sets(4, 2, 2).size() == 6);

    auto all = enumerate_index_sets(5, 2, 2);
    CHECK(std::is_sorted(all.begin(), all.end()));

    CHECK(truncated_dim(4, 2, 0) == 1);
    CHECK(truncated_dim(4, 2, 1) == 5);
    CHECK(truncated_dim(6, 3, 3) == 20);
    CHECK_THROWS(truncated_dim(4, 2, 3));
    CHECK_THROWS(truncated_dim(7, 4, 1));  // d > n-d

    // Telescoping against the full wedge basis.
    for (int n = 2; n <= 8; ++n)
        for (int d = 1; d <= n - d; ++d) {
            CHECK(truncated_dim(n, d, d) == binomial(n, d));
            for (int r = 1; r <= d; ++r)
                CHECK(truncated_dim(n, d, r) - truncated_dim(n, d, r - 1) ==
                      binomial(d, r) * binomial(n - d, r));
        }
}

TEST_CASE("weyl dimension basics") {
    CHECK(weyl_dim(4, GLWeight::constant(0, 4)) == 1);
    CHECK(weyl_dim(5, GLWeight{1, 0, 0, 0, 0}) == 5);
    CHECK(weyl_dim(6, GLWeight{1, 1, 0, 0, 0, 0}) == binomial(6, 2));
    // Twist invariance.
    CHECK(weyl_dim(3, GLWeight{4, 2, 1}) == weyl_dim(3, GLWeight{4, 2, 1}.shifted(-5)));
}

TEST_CASE("weyl dimension equals tableau count") {
    CHECK(ssyt_count(3, Partition{1}) == 3);
    CHECK(ssyt_count(2, Partition{2}) == 3);
    CHECK(ssyt_count(3, Partition{2, 1}) == 8);
    CHECK(ssyt_count(2, Partition{1, 1, 1}) == 0);

    for (int N = 1; N <= 5; ++N)
        for (const Partition& lam : partitions_up_to(8, N))
            CHECK(weyl_dim(N, lam) == ssyt_count(N, lam));
}

TEST_CASE("column pieri") {
    CHECK(pieri_column(Partition{}, 1, 3) == std::vector<Partition>{Partition{1}});
    {
        auto got = pieri_column(Partition{1}, 1, 3);
        CHECK(got == std::vector<Partition>{Partition{1, 1}, Partition{2}});
    }
    {
        auto got = pieri_column(Partition{1, 1}, 2, 3);
        CHECK(got == std::vector<Partition>{Partition{2, 1, 1}, Partition{2, 2}});
    }
    CHECK(pieri_column(Partition{1}, 3, 3).size() == 1);  // only (2,1,1)

    // Dimension conservation: sum over the expansion equals dim times C(N,k).
    for (int N = 1; N <= 5; ++N)
        for (const Partition& lam : partitions_up_to(6, N))
            for (int k = 0; k <= N; ++k) {
                Int total = 0;
                for (const Partition& mu : pieri_column(lam, k, N)) total += weyl_dim(N, mu);
                CHECK(total == weyl_dim(N, lam) * binomial(N, k));
            }
}
