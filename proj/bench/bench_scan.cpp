#include <benchmark/benchmark.h>

#include "gibsum/pisano.hpp"
#include "gibsum/scan.hpp"

using namespace gibsum;

namespace {

const std::vector<Seed>& grid() {
  static const std::vector<Seed> g = coprime_grid(10);
  return g;
}

// Periods are memoized per process; clear so each iteration does the work.
void BM_PeriodTable(benchmark::State& state, bool parallel) {
  const auto hi = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    default_period_cache().clear();
    auto t = parallel ? scan::period_table(Seed(3, 7), 1, hi) : scan::period_table_serial(Seed(3, 7), 1, hi);
    benchmark::DoNotOptimize(t);
  }
}

void BM_TableConformance(benchmark::State& state, bool parallel) {
  const auto k_hi = state.range(0);
  for (auto _ : state) {
    auto r = parallel ? scan::table_conformance(grid(), 1, k_hi)
                      : scan::table_conformance_serial(grid(), 1, k_hi);
    benchmark::DoNotOptimize(r);
  }
}

void BM_ClosedVsBrute(benchmark::State& state, bool parallel) {
  const auto k_hi = state.range(0);
  for (auto _ : state) {
    auto r = parallel ? scan::closed_vs_bruteforce(grid(), 1, k_hi, 10)
                      : scan::closed_vs_bruteforce_serial(grid(), 1, k_hi, 10);
    benchmark::DoNotOptimize(r);
  }
}

void BM_Biconditional(benchmark::State& state, bool parallel) {
  const auto m_hi = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    default_period_cache().clear();
    auto r = parallel ? scan::biconditional(grid(), 2, m_hi, 1, 36)
                      : scan::biconditional_serial(grid(), 2, m_hi, 1, 36);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_PeriodTable, serial, false)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PeriodTable, openmp, true)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TableConformance, serial, false)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TableConformance, openmp, true)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ClosedVsBrute, serial, false)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ClosedVsBrute, openmp, true)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Biconditional, serial, false)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Biconditional, openmp, true)->Arg(60)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
