#include <benchmark/benchmark.h>

#include "trgr/groebner.hpp"
#include "trgr/index_set.hpp"
#include "trgr/plucker.hpp"
#include "trgr/resolution.hpp"
#include "trgr/rng.hpp"
#include "trgr/weyl.hpp"

namespace {

void BM_truncated_dim(benchmark::State& state) {
    for (auto _ : state) {
        trgr::Int total = 0;
        for (int n = 2; n <= 12; ++n)
            for (int d = 1; d <= n - d; ++d)
                for (int r = 0; r <= d; ++r) total += trgr::truncated_dim(n, d, r);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_truncated_dim);

void BM_build_complex(benchmark::State& state) {
    const int nd = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto layers = trgr::build_complex(2 * nd, nd, nd);
        benchmark::DoNotOptimize(layers);
    }
}
BENCHMARK(BM_build_complex)->Arg(3)->Arg(4)->Arg(5);

void BM_weyl_dim(benchmark::State& state) {
    const trgr::Partition lam{5, 3, 2, 1};
    for (auto _ : state) {
        auto d = trgr::weyl_dim(8, lam);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_weyl_dim);

void BM_plucker(benchmark::State& state) {
    trgr::SeededRng rng(1);
    trgr::RationalMatrix z(8, 4);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 4; ++j) z.at(i, j) = rng.small_entry();
    for (auto _ : state) {
        auto p = trgr::plucker(z, 4);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_plucker);

void BM_sample_rank(benchmark::State& state) {
    std::uint64_t seed = 1;
    for (auto _ : state) {
        auto u = trgr::sample_schubert(8, 4, 2, 2, seed++);
        benchmark::DoNotOptimize(u);
    }
}
BENCHMARK(BM_sample_rank);

void BM_groebner_toy(benchmark::State& state) {
    auto ring = trgr::PolyRing::make({"x", "y", "z"});
    const auto x = trgr::MultiPoly::variable(ring, 0);
    const auto y = trgr::MultiPoly::variable(ring, 1);
    const auto z = trgr::MultiPoly::variable(ring, 2);
    const std::vector<trgr::MultiPoly> gens{x * x + y * y + z * z,
                                            x * y + y * z + z * x, x * y * z};
    for (auto _ : state) {
        auto gb = trgr::buchberger(gens, trgr::MonomialOrder::grevlex());
        benchmark::DoNotOptimize(gb);
    }
}
BENCHMARK(BM_groebner_toy);

}  // namespace

BENCHMARK_MAIN();
