#include <benchmark/benchmark.h>

#include "polya/families.hpp"
#include "polya/polya.hpp"

namespace {

using namespace polya;

void BM_Closure(benchmark::State& state) {
  const auto pres = family_group('S', static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pres.build().order());
}
BENCHMARK(BM_Closure)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_Condition2B(benchmark::State& state) {
  const PermGroup G = family_group('A', static_cast<int>(state.range(0))).build();
  const PermGroup H = G.stabilizer(G.degree() - 1);
  for (auto _ : state) benchmark::DoNotOptimize(check_condition_2B(G, H).holds);
}
BENCHMARK(BM_Condition2B)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

const char* const kFields[] = {"x^3-2", "x^3-x^2-2x-8", "x^3-11", "x^3-13"};

void BM_MaximalOrder(benchmark::State& state) {
  const CubicPoly f = CubicPoly::parse(kFields[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(MaximalOrder(f).discriminant());
  state.SetLabel(kFields[state.range(0)]);
}
BENCHMARK(BM_MaximalOrder)->DenseRange(0, 3);

void BM_ClassGroup(benchmark::State& state) {
  const MaximalOrder O(CubicPoly::parse(kFields[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(ClassGroup::compute(O).class_number());
  state.SetLabel(kFields[state.range(0)]);
}
BENCHMARK(BM_ClassGroup)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_MainTheorem(benchmark::State& state) {
  const MaximalOrder O(CubicPoly::parse(kFields[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(verify_main_theorem(O, 200).status);
  state.SetLabel(kFields[state.range(0)]);
}
BENCHMARK(BM_MainTheorem)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  const MaximalOrder O(CubicPoly::parse("x^3-2"));
  for (auto _ : state) benchmark::DoNotOptimize(splitting_census(O, state.range(0)).size());
}
BENCHMARK(BM_Census)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
