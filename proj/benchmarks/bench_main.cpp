#include <benchmark/benchmark.h>

#include <cstdint>

#include "pnc/interval.hpp"
#include "pnc/pipeline.hpp"
#include "pnc/practical.hpp"
#include "pnc/primes.hpp"
#include "pnc/residual_table.hpp"
#include "pnc/weights.hpp"

namespace {

void BM_IntervalMul(benchmark::State& state) {
  pnc::Interval acc = pnc::Interval::one();
  pnc::Interval f = pnc::Interval::point(1.0 - 1.0 / 8388608.0);
  for (auto _ : state) {
    acc *= f;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_IntervalMul);

void BM_IntervalLog(benchmark::State& state) {
  pnc::Interval x = pnc::Interval::point(1234.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pnc::iv_log(x));
  }
}
BENCHMARK(BM_IntervalLog);

void BM_SieveRange(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    pnc::for_each_prime(2, limit, [&](std::uint64_t) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(limit));
}
BENCHMARK(BM_SieveRange)->Arg(1 << 20)->Arg(1 << 24);

void BM_EnumeratePractical(benchmark::State& state) {
  const auto n_max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto rows = pnc::enumerate_practical(n_max);
    benchmark::DoNotOptimize(rows.size());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n_max));
}
BENCHMARK(BM_EnumeratePractical)->Arg(1 << 16)->Arg(1 << 20);

void BM_PrimeWeight(benchmark::State& state) {
  std::uint64_t q = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pnc::prime_weight(q, 13).value);
    q = q == 3 ? 1000003 : 3;
  }
}
BENCHMARK(BM_PrimeWeight);

void BM_ResidualScan(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        pnc::log_sum_residual_sup(1 << 20, std::uint64_t{1} << 24));
  }
}
BENCHMARK(BM_ResidualScan);

void BM_Pipeline(benchmark::State& state) {
  pnc::PipelineConfig cfg;
  cfg.n_max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pnc::run_pipeline(cfg).alpha_partial);
  }
}
BENCHMARK(BM_Pipeline)->Arg(1 << 14)->Arg(1 << 17)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
