#include <benchmark/benchmark.h>

#include <random>

#include "rla/catalog.hpp"
#include "rla/derivations.hpp"
#include "rla/matrix.hpp"
#include "rla/subspace.hpp"

using namespace rla;

static void BM_Rref(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(0, 2);
  FieldMatrix m(3, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, Coord(d(rng)));
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(16)->Arg(64)->Arg(128);

static void BM_DerP(benchmark::State& state) {
  const auto L = heisenberg(3, HeisenbergVariant::toral_center).algebra;
  for (auto _ : state) benchmark::DoNotOptimize(der_p(L));
}
BENCHMARK(BM_DerP);

static void BM_DerPDim4(benchmark::State& state) {
  const auto all = enumerate_nilpotent(2, 4);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(der_p(all[k++ % all.size()].algebra));
}
BENCHMARK(BM_DerPDim4);

static void BM_SquareZeroSearch(benchmark::State& state) {
  const auto L = heisenberg(std::uint32_t(state.range(0)), HeisenbergVariant::unipotent).algebra;
  for (auto _ : state) benchmark::DoNotOptimize(find_square_zero_outer(L));
}
BENCHMARK(BM_SquareZeroSearch)->Arg(2)->Arg(3)->Arg(5);

static void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_nilpotent(3, std::size_t(state.range(0))));
}
BENCHMARK(BM_Enumerate)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
