#include <benchmark/benchmark.h>

#include "sphflex/coloring.hpp"
#include "sphflex/continuation.hpp"
#include "sphflex/corpus.hpp"
#include "sphflex/motions.hpp"
#include "sphflex/mu_system.hpp"
#include "sphflex/quad.hpp"
#include "sphflex/tables.hpp"

using namespace sphflex;

static void BM_EnumerateNapK33(benchmark::State& state) {
  Graph g = corpus::k33();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_nap(g, false));
}
BENCHMARK(BM_EnumerateNapK33);

static void BM_EnumerateNapK44(benchmark::State& state) {
  Graph g = corpus::k44();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_nap(g, true));
}
BENCHMARK(BM_EnumerateNapK44)->Unit(benchmark::kMillisecond);

static void BM_Certificate(benchmark::State& state) {
  Graph g = corpus::k44();
  for (auto _ : state) benchmark::DoNotOptimize(flexibility_certificate(g));
}
BENCHMARK(BM_Certificate);

static void BM_DegreeTableOrbits(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_degree_table_orbits());
}
BENCHMARK(BM_DegreeTableOrbits)->Unit(benchmark::kMillisecond);

static void BM_AdmissibleCases(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(admissible_cases());
}
BENCHMARK(BM_AdmissibleCases)->Unit(benchmark::kMillisecond);

static void BM_MuSystemCase1(benchmark::State& state) {
  auto eqs = build_pullback_system(reference_cases()[0], {},
                                   {QuadCut::om, QuadCut::ou, QuadCut::em, QuadCut::eu});
  for (auto _ : state) benchmark::DoNotOptimize(mu_system_feasible(eqs));
}
BENCHMARK(BM_MuSystemCase1);

static void BM_Classify(benchmark::State& state) {
  QuadLengths q{0.3, 0.7, 0.3, 0.7};
  for (auto _ : state) benchmark::DoNotOptimize(classify(q));
}
BENCHMARK(BM_Classify);

static void BM_CdaMotion(benchmark::State& state) {
  auto ts = evenly_spaced(7.5, 40.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cda_motion({}, ts));
}
BENCHMARK(BM_CdaMotion)->Arg(50)->Arg(500);

static void BM_TraceCda(benchmark::State& state) {
  const GaugeFix gauge{1, 6, 2};
  auto seed = regauge(cda_realization({}, 8.0), gauge);
  auto lam = LengthAssignment::from_delta(cda_deltas({}));
  TraceConfig cfg;
  cfg.max_steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trace(corpus::k33(), lam, seed, gauge, cfg));
}
BENCHMARK(BM_TraceCda)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
