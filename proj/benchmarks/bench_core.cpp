#include <benchmark/benchmark.h>

#include <numbers>

#include "pstlab/evolution.hpp"
#include "pstlab/graph.hpp"
#include "pstlab/pst.hpp"
#include "pstlab/spectral.hpp"
#include "pstlab/switching.hpp"

namespace {

void BM_Hypercube(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pstlab::hypercube(n));
  }
}
BENCHMARK(BM_Hypercube)->Arg(6)->Arg(8)->Arg(10);

void BM_Eigendecompose(benchmark::State& state) {
  const pstlab::Graph g = pstlab::hypercube(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pstlab::eigendecompose(g));
  }
}
BENCHMARK(BM_Eigendecompose)->Arg(5)->Arg(7)->Arg(9);

void BM_Propagator(benchmark::State& state) {
  const pstlab::Graph g = pstlab::switched_hypercube(static_cast<int>(state.range(0)));
  const pstlab::SpectralDecomposition d = pstlab::eigendecompose(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pstlab::propagator(d, std::numbers::pi / 2));
  }
}
BENCHMARK(BM_Propagator)->Arg(5)->Arg(7)->Arg(9);

void BM_FindPstPairs(benchmark::State& state) {
  const pstlab::Graph g = pstlab::switched_hypercube(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pstlab::find_pst_pairs(g, std::numbers::pi / 2));
  }
}
BENCHMARK(BM_FindPstPairs)->Arg(5)->Arg(6)->Arg(7);

void BM_BuildBlockCube(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<double> blocks(std::size_t{1} << (n - 4), 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pstlab::build_block_cube(pstlab::BlockSpec(n, blocks)));
  }
}
BENCHMARK(BM_BuildBlockCube)->Arg(5)->Arg(7)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
