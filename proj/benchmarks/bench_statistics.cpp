#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "permstat/exact_oracle.hpp"
#include "permstat/height_graph.hpp"
#include "permstat/sampler.hpp"
#include "permstat/statistics.hpp"

namespace {

using permstat::SeededGenerator;

std::vector<std::uint32_t> random_values(std::size_t n, std::uint64_t seed) {
  std::vector<std::uint32_t> v(n);
  SeededGenerator gen(seed);
  permstat::sample_permutation_into(v, gen);
  return v;
}

// A fresh permutation every 64 iterations keeps the timing from fixating on one input.
template <typename Kernel>
void run_kernel(benchmark::State& state, Kernel kernel) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<std::uint32_t>> inputs;
  for (std::uint64_t s = 0; s < 8; ++s) inputs.push_back(random_values(n, s));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel(inputs[(k++ / 64) % inputs.size()]));
  }
  state.SetComplexityN(state.range(0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Naive(benchmark::State& state) {
  run_kernel(state, [](const auto& v) { return permstat::kernels::min_distance_naive(v); });
}
BENCHMARK(BM_Naive)->RangeMultiplier(2)->Range(1 << 8, 1 << 12)->Complexity();

void BM_Banded(benchmark::State& state) {
  run_kernel(state, [](const auto& v) {
    return permstat::kernels::min_distance_banded(v, permstat::breadth_band_limit(v.size()) + 1);
  });
}
BENCHMARK(BM_Banded)->RangeMultiplier(4)->Range(1 << 8, 1 << 18)->Complexity();

void BM_Adaptive(benchmark::State& state) {
  run_kernel(state, [](const auto& v) { return permstat::kernels::min_distance_adaptive(v); });
}
BENCHMARK(BM_Adaptive)->RangeMultiplier(4)->Range(1 << 8, 1 << 20)->Complexity(benchmark::oN);

void BM_MinJump(benchmark::State& state) {
  run_kernel(state, [](const auto& v) { return permstat::kernels::min_jump(v); });
}
BENCHMARK(BM_MinJump)->RangeMultiplier(4)->Range(1 << 8, 1 << 20)->Complexity(benchmark::oN);

void BM_ClosePairStarters(benchmark::State& state) {
  run_kernel(state, [](const auto& v) { return permstat::kernels::close_pair_starter_count(v, 2); });
}
BENCHMARK(BM_ClosePairStarters)->RangeMultiplier(4)->Range(1 << 8, 1 << 18);

void BM_Sample(benchmark::State& state) {
  std::vector<std::uint32_t> v(static_cast<std::size_t>(state.range(0)));
  SeededGenerator gen(1);
  for (auto _ : state) {
    permstat::sample_permutation_into(v, gen);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Sample)->RangeMultiplier(4)->Range(1 << 8, 1 << 20)->Complexity(benchmark::oN);

void BM_ZStarPath(benchmark::State& state) {
  const auto vertices = static_cast<unsigned>(state.range(0));
  permstat::ColoredGraph g(vertices);
  for (unsigned v = 0; v + 1 < vertices; ++v) g.add_edge(v, v + 1, permstat::EdgeColor::red);
  for (auto _ : state) benchmark::DoNotOptimize(permstat::Z_star(g, 40, 2, permstat::ZStarMethod::pie));
}
BENCHMARK(BM_ZStarPath)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_EnumerateBreadth(benchmark::State& state) {
  permstat::OracleLimits limits;
  limits.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        permstat::enumerate_distribution(static_cast<unsigned>(state.range(0)), permstat::Statistic::breadth(), limits));
  }
}
BENCHMARK(BM_EnumerateBreadth)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
