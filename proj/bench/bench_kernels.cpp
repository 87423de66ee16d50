// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <vector>

#include "tq/kernels.hpp"
#include "tq/random.hpp"

namespace {

using namespace tq;

std::vector<double> gaps_for(std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = 0.1 + 0.05 * static_cast<double>(i);
  return g;
}

template <bool Parallel>
void BM_JointLevels(benchmark::State& state) {
  const auto gaps = gaps_for(static_cast<std::size_t>(state.range(0)));
  const std::size_t size = std::size_t{2} << gaps.size();
  std::vector<double> e(size), w(size);
  for (auto _ : state) {
    if constexpr (Parallel) kernels::parallel::joint_levels(gaps, 1.0, 0.5, 1.0, e, w);
    else kernels::serial::joint_levels(gaps, 1.0, 0.5, 1.0, e, w);
    benchmark::DoNotOptimize(w.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(size));
}

template <bool Parallel>
void BM_ExpShiftSum(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  std::vector<double> base(size), v(size);
  Rng rng(1);
  for (auto& x : base) x = -10.0 * rng.uniform();
  for (auto _ : state) {
    v = base;
    double s = 0.0;
    if constexpr (Parallel) s = kernels::parallel::exp_shift_sum(v, 0.0);
    else s = kernels::serial::exp_shift_sum(v, 0.0);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(size));
}

template <bool Parallel>
void BM_SwapProbe(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> v(std::size_t{2} << n, 1.0);
  for (auto _ : state) {
    if constexpr (Parallel) kernels::parallel::swap_probe_with_machine(v, n, n / 2);
    else kernels::serial::swap_probe_with_machine(v, n, n / 2);
    benchmark::DoNotOptimize(v.data());
  }
}

template <bool Parallel>
void BM_ReadoutTrials(benchmark::State& state) {
  const kernels::ReadoutTrialSpec spec{0.24, BinaryDistribution(0.86), BinaryDistribution(0.76), 116,
                                       static_cast<std::size_t>(state.range(0)), 5};
  for (auto _ : state) {
    std::uint64_t c = 0;
    if constexpr (Parallel) c = kernels::parallel::count_balanced_decisions(spec);
    else c = kernels::serial::count_balanced_decisions(spec);
    benchmark::DoNotOptimize(c);
  }
}

}  // namespace

BENCHMARK(BM_JointLevels<false>)->Arg(12)->Arg(18);
BENCHMARK(BM_JointLevels<true>)->Arg(12)->Arg(18);
BENCHMARK(BM_ExpShiftSum<false>)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_ExpShiftSum<true>)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_SwapProbe<false>)->Arg(12)->Arg(18);
BENCHMARK(BM_SwapProbe<true>)->Arg(12)->Arg(18);
BENCHMARK(BM_ReadoutTrials<false>)->Arg(10000);
BENCHMARK(BM_ReadoutTrials<true>)->Arg(10000);

BENCHMARK_MAIN();
