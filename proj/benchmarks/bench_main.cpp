#include <benchmark/benchmark.h>

#include "rootcircles/parabolic.hpp"
#include "rootcircles/reports.hpp"
#include "rootcircles/splitting.hpp"

namespace rc = rootcircles;

namespace {

void BM_BuildRootSystemE8(benchmark::State& state) {
  const auto type = rc::make_lie_type(rc::Family::E, 8);
  for (auto _ : state) {
    auto rs = rc::build_root_system(type);
    benchmark::DoNotOptimize(rs.positive_roots.size());
  }
}
BENCHMARK(BM_BuildRootSystemE8);

void BM_StringInventorySpinor8(benchmark::State& state) {
  const auto p = rc::spinor_variety(8);
  for (auto _ : state)
    for (const auto& alpha : p.omitted) {
      auto inv = rc::string_inventory(p, alpha);
      benchmark::DoNotOptimize(inv.size());
    }
}
BENCHMARK(BM_StringInventorySpinor8);

void BM_FlatnessFullFlagF4(benchmark::State& state) {
  const auto p = rc::make_parabolic(
      rc::build_root_system(rc::make_lie_type(rc::Family::F, 4)),
      {1, 2, 3, 4});
  for (auto _ : state) {
    auto report = rc::flatness_report(p);
    benchmark::DoNotOptimize(report.verdict);
  }
}
BENCHMARK(BM_FlatnessFullFlagF4);

void BM_Wedge2LargeSplitting(benchmark::State& state) {
  rc::SplittingType s;
  for (rc::Int d = -40; d <= 40; ++d) s.summands[d] = 5;
  for (auto _ : state) {
    auto w = rc::wedge2(s);
    benchmark::DoNotOptimize(w.summands.size());
  }
}
BENCHMARK(BM_Wedge2LargeSplitting);

}  // namespace

BENCHMARK_MAIN();
