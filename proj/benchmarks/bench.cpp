#include <benchmark/benchmark.h>

#include "g3ss/search.hpp"
#include "g3ss/zeta.hpp"

namespace {

g3ss::Curve cm_like(std::uint64_t p) {
    auto ctx = g3ss::build_field(p, 1);
    return g3ss::Curve::make(ctx, g3ss::Poly::from_ints(ctx, {0, 7, 0, 14, 0, 7, 0, 1}));
}

void BM_PointCountPrime(benchmark::State& state) {
    auto p = static_cast<std::uint64_t>(state.range(0));
    g3ss::Curve C = cm_like(p);
    for (auto _ : state) benchmark::DoNotOptimize(g3ss::point_count(C, 1));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p));
}
BENCHMARK(BM_PointCountPrime)->Arg(101)->Arg(1009)->Arg(10007);

void BM_PointCountCubicExt(benchmark::State& state) {
    auto p = static_cast<std::uint64_t>(state.range(0));
    g3ss::Curve C = cm_like(p);
    for (auto _ : state) benchmark::DoNotOptimize(g3ss::point_count(C, 3));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p * p * p));
}
BENCHMARK(BM_PointCountCubicExt)->Arg(31)->Arg(101);

void BM_CartierManin(benchmark::State& state) {
    g3ss::Curve C = cm_like(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(g3ss::cartier_manin(C));
}
BENCHMARK(BM_CartierManin)->Arg(101)->Arg(1009)->Arg(10007);

// The search inner loop minus counting: squarefreeness, matrix, kernel
// filtration over the whole odd family.
void BM_SearchCheapRejects(benchmark::State& state) {
    auto p = static_cast<std::uint64_t>(state.range(0));
    auto ctx = g3ss::build_field(p, 1);
    for (auto _ : state) {
        std::uint64_t survivors = 0;
        for (std::uint64_t a5 = 0; a5 < p; ++a5)
            for (std::uint64_t a3 = 0; a3 < p; ++a3)
                for (std::uint64_t a1 = 0; a1 < p; ++a1) {
                    g3ss::Poly f = g3ss::Poly::from_ints(
                        ctx, {0, static_cast<std::int64_t>(a1), 0, static_cast<std::int64_t>(a3),
                              0, static_cast<std::int64_t>(a5), 0, 1});
                    if (!f.is_squarefree()) continue;
                    g3ss::CartierData cd = g3ss::cartier_manin(g3ss::Curve::make(ctx, f));
                    if (!cd.nilpotent || cd.a_number != 1) continue;
                    ++survivors;
                }
        benchmark::DoNotOptimize(survivors);
    }
}
BENCHMARK(BM_SearchCheapRejects)->Arg(7)->Arg(11);

}  // namespace

BENCHMARK_MAIN();
