#include <benchmark/benchmark.h>

#include "polydescent/blaschke.hpp"
#include "polydescent/crofton.hpp"
#include "polydescent/explore.hpp"
#include "polydescent/level_set.hpp"
#include "polydescent/target.hpp"
#include "polydescent/tree.hpp"

using namespace polydescent;

namespace {

FactoredPolynomial corpus_instance(int i) {
  InstanceSpec spec;
  return generate_polynomial(spec, i);
}

void BM_CriticalPoints(benchmark::State& state) {
  const auto poly = corpus_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(critical_points(poly));
}
BENCHMARK(BM_CriticalPoints)->DenseRange(0, 3);

void BM_TraceCubicBranches(benchmark::State& state) {
  const Complex w = std::polar(1.0, two_pi / 3);
  const PolynomialTarget t(FactoredPolynomial({{{1, 0}, 1}, {w, 1}, {std::conj(w), 1}}));
  const auto critical = t.special_points()[3];
  for (auto _ : state) benchmark::DoNotOptimize(trace_all_branches(t, critical));
}
BENCHMARK(BM_TraceCubicBranches);

void BM_DescentTree(benchmark::State& state) {
  const PolynomialTarget t(corpus_instance(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(build_descent_tree(t));
}
BENCHMARK(BM_DescentTree)->DenseRange(0, 3);

void BM_Crofton(benchmark::State& state) {
  const PolynomialTarget t(corpus_instance(0));
  const auto tree = build_descent_tree(t);
  const auto& path = tree.edges.front().path;
  for (auto _ : state) benchmark::DoNotOptimize(crofton_length(path, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Crofton)->Arg(720)->Arg(3600);

void BM_MaxCrossings(benchmark::State& state) {
  const PolynomialTarget t(corpus_instance(0));
  const auto tree = build_descent_tree(t);
  const auto& path = tree.edges.front().path;
  for (auto _ : state) benchmark::DoNotOptimize(max_crossings(path, 360, 256));
}
BENCHMARK(BM_MaxCrossings);

void BM_LevelComponents(benchmark::State& state) {
  const auto poly = FactoredPolynomial({{{1, 0}, 1}, {{-1, 0}, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(count_level_components(poly, 0.5, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LevelComponents)->Arg(256)->Arg(512)->Arg(1024);

void BM_BlaschkeTree(benchmark::State& state) {
  InstanceSpec spec;
  spec.kind = InstanceKind::blaschke;
  const BlaschkeTarget t(generate_blaschke(spec, static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(build_descent_tree(t));
}
BENCHMARK(BM_BlaschkeTree)->DenseRange(0, 2);

void BM_Explore(benchmark::State& state) {
  InstanceSpec spec;
  for (auto _ : state) benchmark::DoNotOptimize(explore_lengths(spec, static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_Explore)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
