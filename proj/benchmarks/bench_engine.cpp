#include <benchmark/benchmark.h>

#include "flasque/classifier.hpp"
#include "flasque/resolution.hpp"

using namespace flasque;

namespace {

void BM_FlasqueResolutionSn(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    FiniteGroup G = FiniteGroup::symmetric(n);
    GLattice J = norm_one_lattice(G, point_stabilizer(G, n));
    for (auto _ : state) benchmark::DoNotOptimize(flasque_resolution(J));
}
BENCHMARK(BM_FlasqueResolutionSn)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_SylowSubgroup(benchmark::State& state) {
    FiniteGroup G = FiniteGroup::symmetric(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sylow_subgroup(G, 2));
}
BENCHMARK(BM_SylowSubgroup)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_DecideSymmetric(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto p = static_cast<std::uint64_t>(state.range(1));
    FiniteGroup G = FiniteGroup::symmetric(n);
    FiniteGroup H = point_stabilizer(G, n);
    for (auto _ : state) benchmark::DoNotOptimize(decide_p_invertibility(G, H, p));
}
BENCHMARK(BM_DecideSymmetric)->Args({6, 2})->Args({6, 3})->Args({9, 3})->Args({12, 2})->Unit(benchmark::kMillisecond);

void BM_ClassifyAllPrimes(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_norm_one_family(Family::Symmetric, n));
        benchmark::DoNotOptimize(classify_norm_one_family(Family::Alternating, n));
    }
}
BENCHMARK(BM_ClassifyAllPrimes)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
