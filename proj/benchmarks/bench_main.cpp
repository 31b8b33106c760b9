#include <benchmark/benchmark.h>

#include "glat/cohomology.hpp"
#include "glat/prolongation.hpp"
#include "glat/rng.hpp"
#include "glat/subalgebra.hpp"

using namespace glat;

namespace {

RatMatrix random_matrix(std::uint64_t seed, int rows, int cols) {
  Rng rng(seed);
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rat_of(rng.int_in(-9, 9), rng.int_in(1, 4));
  return m;
}

void BM_rank_bareiss(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RatMatrix m = random_matrix(42, n, n + 8);
  for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_rank_bareiss)->Arg(16)->Arg(32)->Arg(64);

void BM_kernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RatMatrix m = random_matrix(43, n, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(m.kernel().rows());
}
BENCHMARK(BM_kernel)->Arg(16)->Arg(32);

void BM_build_so_split(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_so_split(n).dim());
}
BENCHMARK(BM_build_so_split)->Arg(3)->Arg(4);

void BM_cochain_slice_q2(benchmark::State& state) {
  const GradedLieAlgebra g = build_so_split(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const CochainComplexSlice s = cochain_differential(g, 2, 1);
    benchmark::DoNotOptimize(s.d_out.rank());
  }
}
BENCHMARK(BM_cochain_slice_q2)->Arg(3)->Arg(4);

void BM_h1_negative(benchmark::State& state) {
  const GradedLieAlgebra g = build_so_split(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(h1_negative_test(g));
}
BENCHMARK(BM_h1_negative)->Arg(3)->Arg(4);

void BM_gap_scan_trials(benchmark::State& state) {
  const GradedLieAlgebra g = build_g2_split();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const GapScanResult r = gap_scan(g, 9, 14, 64, seed++);
    benchmark::DoNotOptimize(r.histogram.size());
  }
  state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_gap_scan_trials);

void BM_prolongation_g2(benchmark::State& state) {
  const NilpotentGradedAlgebra n = negative_part(build_g2_split());
  for (auto _ : state) benchmark::DoNotOptimize(tanaka_prolong_full(n).total());
}
BENCHMARK(BM_prolongation_g2);

}  // namespace

BENCHMARK_MAIN();
