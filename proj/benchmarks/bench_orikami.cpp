#include <benchmark/benchmark.h>

#include <string>

#include "orikami/analysis.hpp"
#include "orikami/construct.hpp"
#include "orikami/generators.hpp"
#include "orikami/io.hpp"
#include "orikami/knotid.hpp"

namespace {

using namespace orikami;

void BM_TorusFoldAndCertify(benchmark::State& state) {
  const auto [f, loop] = torus_folding({.n = static_cast<int>(state.range(0))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify(fold_loop(f, loop), 0));
  }
}
BENCHMARK(BM_TorusFoldAndCertify)->DenseRange(0, 6, 2);

void BM_JonesTorusDiagram(benchmark::State& state) {
  const auto [f, loop] = torus_folding({.n = static_cast<int>(state.range(0))});
  const KnotDiagram d = simplify(diagram_from_polyline(fold_loop(f, loop), 0));
  state.counters["crossings"] = d.crossing_count();
  for (auto _ : state) benchmark::DoNotOptimize(jones(d));
}
BENCHMARK(BM_JonesTorusDiagram)->DenseRange(0, 6, 2);

void BM_ConstructFigureEight(benchmark::State& state) {
  const StickDiagram s =
      read_sticks(read_text_file(std::string(ORIKAMI_BENCH_DATA) + "/figure_eight_8.json"));
  for (auto _ : state) benchmark::DoNotOptimize(construct_from_sticks(s));
}
BENCHMARK(BM_ConstructFigureEight);

void BM_ProperVerdictSimpleFolds(benchmark::State& state) {
  const Folding f = simple_fold_sequence(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(properness_verdict(f));
}
BENCHMARK(BM_ProperVerdictSimpleFolds)->DenseRange(1, kMaxSimpleFolds);

}  // namespace

BENCHMARK_MAIN();
