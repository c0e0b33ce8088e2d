#include <benchmark/benchmark.h>

#include "galois/enumerate.hpp"
#include "galois/galois.hpp"

using namespace galois;

namespace {

const UniverseRef& two() {
  static const UniverseRef u = Universe::create("A", 2);
  return u;
}

void BM_Image(benchmark::State& state) {
  const auto b = Universe::create("B", 3);
  Sampler s(1);
  const MultiFunction f = s.function(two(), b, static_cast<std::size_t>(state.range(0)));
  const Relation r = Relation::full(two(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(imageOfRelation(f, r));
}
BENCHMARK(BM_Image)->DenseRange(1, 3);

void BM_RvsClosure(benchmark::State& state) {
  const FunctionClass m = sampleClass(2, two(), two(), 2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rvsClosure(m));
}
BENCHMARK(BM_RvsClosure)->Arg(2)->Arg(4)->Arg(8);

void BM_LcClosure(benchmark::State& state) {
  const FunctionClass m = rvsClosure(sampleClass(3, two(), two(), 2, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(lcClosure(m));
}
BENCHMARK(BM_LcClosure)->Arg(2)->Arg(4);

void BM_CsfAdmits(benchmark::State& state) {
  const FunctionClass m = sampleClass(4, two(), two(), 2, 4);
  const IntensionalCSF c = csf(m, static_cast<std::size_t>(state.range(0)));
  Sampler s(5);
  for (auto _ : state) benchmark::DoNotOptimize(c.admits(s.function(two(), two(), 2)));
}
BENCHMARK(BM_CsfAdmits)->DenseRange(1, 3);

void BM_WcmClosure(benchmark::State& state) {
  const ConstraintSet t = sampleConstraintSet(6, two(), two(), 2, static_cast<std::size_t>(state.range(0)));
  Bounds b;
  for (auto _ : state) benchmark::DoNotOptimize(wcmClosure(t, b));
}
BENCHMARK(BM_WcmClosure)->Arg(2)->Arg(6);

void BM_CmClosure(benchmark::State& state) {
  const ConstraintSet t = sampleConstraintSet(7, two(), two(), 2, 3);
  Bounds b;
  b.maxIndeterminates = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cmClosure(t, b));
}
BENCHMARK(BM_CmClosure)->DenseRange(0, 2);

void BM_SeparatingTotal(benchmark::State& state) {
  ConstraintSet t(two(), two(), 2);
  t.insert(Constraint::equality(two(), two()));
  t.insert(Constraint::empty(two(), two(), 1));
  t.insert(Constraint::trivial(two(), two(), 1));
  const MinorClosedSet closed = cmClosure(t, Bounds{});
  const Constraint c(Relation::full(two(), 2), Relation::fromTuples(two(), 2, std::vector<Tuple>{{0, 0}, {1, 1}, {0, 1}}));
  for (auto _ : state) benchmark::DoNotOptimize(separatingTotalFunction(closed, c));
}
BENCHMARK(BM_SeparatingTotal);

}  // namespace

BENCHMARK_MAIN();
