#include <benchmark/benchmark.h>

#include "scf/circle.hpp"
#include "scf/so3.hpp"
#include "scf/torus.hpp"

using namespace scf;

static void CanonicalFormD(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  std::vector<Turn> turns;
  for (int i = 1; i <= rank; ++i) turns.emplace_back(2 * i + 1, 4 * rank + 3);
  const TorusElement x(turns, GroupTag::so_even(rank));
  for (auto _ : state) {
    auto cf = canonical_form(x);
    benchmark::DoNotOptimize(cf);
  }
}
BENCHMARK(CanonicalFormD)->Arg(4)->Arg(8)->Arg(16);

static void WeylOrbitEnumeration(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  std::vector<Turn> turns;
  for (int i = 1; i <= rank; ++i) turns.emplace_back(i, 2 * rank + 1);
  const TorusElement x(turns, GroupTag::so_even(rank));
  for (auto _ : state) {
    auto orbit = weyl_orbit(x);
    benchmark::DoNotOptimize(orbit);
  }
}
BENCHMARK(WeylOrbitEnumeration)->Arg(3)->Arg(4)->Arg(5);

static void CircleScan(benchmark::State& state) {
  const WeightSequence a({1, 1, 2, 3, 4, 5});  // holds: the scan runs to the bound
  for (auto _ : state) {
    auto v = decide_scf_circle(a, state.range(0));
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(CircleScan)->Arg(200)->Arg(1000);

static void So3Scan(benchmark::State& state) {
  const SpinSequence a({1, 2});
  for (auto _ : state) {
    auto v = decide_scf_so3(a, state.range(0));
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(So3Scan)->Arg(100)->Arg(500);

static void FusionScan(benchmark::State& state) {
  for (auto _ : state) {
    bool controls = fusion_elementwise(GroupTag::so_odd(3), GroupTag::so_even(4),
                                       EmbeddingRule::AppendZeroTurn, state.range(0));
    benchmark::DoNotOptimize(controls);
  }
}
BENCHMARK(FusionScan)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
