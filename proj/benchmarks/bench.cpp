#include <benchmark/benchmark.h>

#include "kneser/classifier.hpp"
#include "kneser/oracle.hpp"
#include "kneser/profinite.hpp"
#include "kneser/setlang.hpp"
#include "kneser/transforms.hpp"

using namespace kneser;

namespace {

// n fibers of alternating full circles and arcs with pieces on the 1/q grid.
HybridSet striped(std::uint32_t n, std::uint32_t q, std::uint32_t shift) {
  HybridGroup g(FiniteAbelianGroup({n}), 1);
  std::vector<std::pair<ElementId, IntervalUnion>> fibers;
  for (ElementId x = 0; x < n; x += 2) {
    std::vector<Arc> arcs;
    for (std::uint32_t k = 0; k < q; k += 2) arcs.push_back({Rational((k + shift) % q, q), Rational(1, q)});
    for (auto& a : arcs) a.left.canonicalize();
    fibers.emplace_back(x, x % 4 == 0 ? IntervalUnion::full() : IntervalUnion::from_arcs(std::move(arcs)));
  }
  return HybridSet::from_fibers(g, std::move(fibers));
}

void BM_Sumset(benchmark::State& state) {
  auto n = static_cast<std::uint32_t>(state.range(0));
  auto a = striped(n, 12, 0), b = striped(n, 12, 1);
  for (auto _ : state) benchmark::DoNotOptimize(sumset(a, b));
}
BENCHMARK(BM_Sumset)->Arg(8)->Arg(32)->Arg(128);

void BM_ClassifyExtendible(benchmark::State& state) {
  auto env = setlang::load("group G = Z/17 x T\nset A = {1,3,5,7}x[0,0.8]\nset B = {0,2}x[0,0.9]\n");
  for (auto _ : state) benchmark::DoNotOptimize(classify(env.set("A"), env.set("B")));
}
BENCHMARK(BM_ClassifyExtendible);

void BM_ClassifyQuasiPeriodic(benchmark::State& state) {
  auto env = setlang::load("group G = Z/4 x T\nset A = {0}xT | {1}x{0}\nset B = {0}xT | {1}x[0,1/2]\n");
  for (auto _ : state) benchmark::DoNotOptimize(classify(env.set("A"), env.set("B")));
}
BENCHMARK(BM_ClassifyQuasiPeriodic);

void BM_TransformSequence(benchmark::State& state) {
  auto env = setlang::load("group G = T\nset A = {0}x[0,1/4]\nset B = {0}x[0,1/3]\n");
  for (auto _ : state) benchmark::DoNotOptimize(transform_sequence(env.set("A"), env.set("B"), 6));
}
BENCHMARK(BM_TransformSequence);

void BM_ProfiniteSum(benchmark::State& state) {
  auto c = seven_adic_example();
  auto depth = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sum_truncations(c, c, depth));
}
BENCHMARK(BM_ProfiniteSum)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state, const char* family, const char* suite) {
  auto f = oracle::EnumerationFamily::parse(family);
  f.dedup = oracle::Dedup::Simultaneous;
  for (auto _ : state) benchmark::DoNotOptimize(oracle::run_suite(f, suite));
}
BENCHMARK_CAPTURE(BM_Sweep, finite8_subcritical, "finite:8", "subcritical-identities")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, finite8_coverage, "finite:8", "classification-coverage")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, hybrid2q2_coverage, "hybrid:2:2", "classification-coverage")
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
