#include <benchmark/benchmark.h>

#include <random>

#include "flasque/cohomology.hpp"
#include "flasque/lattice.hpp"
#include "flasque/linalg.hpp"

using namespace flasque;

namespace {

IntMatrix random_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-50, 50);
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
    return a;
}

void BM_SmithDiagonal(benchmark::State& state) {
    const IntMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 17);
    for (auto _ : state) benchmark::DoNotOptimize(smith_diagonal(a));
}
BENCHMARK(BM_SmithDiagonal)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_SmithNormalForm(benchmark::State& state) {
    const IntMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 23);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

// H^-1 of J_{S_n/S_{n-1}} over the whole group.
void BM_TateHMinus1(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    FiniteGroup G = FiniteGroup::symmetric(n);
    GLattice J = norm_one_lattice(G, point_stabilizer(G, n));
    for (auto _ : state) benchmark::DoNotOptimize(tate_h_minus1(G, J));
}
BENCHMARK(BM_TateHMinus1)->DenseRange(3, 7);

}  // namespace
