// Parallel closure against the serial path and the std::set reference.

#include <benchmark/benchmark.h>

#include "chevcomm/enumerate.hpp"
#include "chevcomm/subgroups.hpp"

using namespace chevcomm;

namespace {

const Ambient& sl3_z4() {
  static const Ambient amb(SystemLabel::parse("A2"), FiniteRing({4}));
  return amb;
}

const Ambient& sp4_z27() {
  static const Ambient amb(SystemLabel::parse("C2"), FiniteRing({27}));
  return amb;
}

void BM_Sl3Closure(benchmark::State& state) {
  const Ambient& amb = sl3_z4();
  const auto gens = absolute_generators(amb);
  ClosureOptions opts;
  opts.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(closure(amb.space(), gens, opts).size());
}
BENCHMARK(BM_Sl3Closure)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Sl3Reference(benchmark::State& state) {
  const Ambient& amb = sl3_z4();
  const auto gens = absolute_generators(amb);
  for (auto _ : state) benchmark::DoNotOptimize(reference_closure(amb.space(), gens).size());
}
BENCHMARK(BM_Sl3Reference)->Unit(benchmark::kMillisecond);

void BM_Sp4RelativeLevel9(benchmark::State& state) {
  const Ambient& amb = sp4_z27();
  const Ideal nine = principal_ideal(amb.ring(), 9);
  ClosureOptions opts;
  opts.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(relative_elementary(amb, nine, opts).size());
}
BENCHMARK(BM_Sp4RelativeLevel9)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
