#include <benchmark/benchmark.h>

#include "detideal/detideals.hpp"
#include "detideal/enumerate.hpp"
#include "detideal/smith.hpp"
#include "detideal/survey.hpp"

using namespace detideal;

namespace {

const Graph& petersen() {
  static const Graph g = [] {
    Graph p(10);
    for (int i = 0; i < 5; ++i) {
      p.add_edge(i, (i + 1) % 5);
      p.add_edge(i, i + 5);
      p.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return p;
  }();
  return g;
}

void BM_BigIntegerProduct(benchmark::State& state) {
  Integer a = Integer::pow(Integer(3), static_cast<unsigned>(state.range(0)));
  Integer b = a + Integer(1);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_BigIntegerProduct)->Arg(64)->Arg(1024);

void BM_CanonicalCode(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(petersen()));
}
BENCHMARK(BM_CanonicalCode);

void BM_SnfInteger(benchmark::State& state) {
  const IntMatrix m = build_matrix(petersen(), static_cast<MatrixKind>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(snf_integer(m));
}
BENCHMARK(BM_SnfInteger)->DenseRange(0, 3);

void BM_SnfPolyQ(benchmark::State& state) {
  const QPolyMatrix m = to_rational(char_matrix(petersen(), MatrixKind::Adjacency));
  for (auto _ : state) benchmark::DoNotOptimize(snf_poly_q(m));
}
BENCHMARK(BM_SnfPolyQ);

void BM_AllMinors(benchmark::State& state) {
  const ZPolyMatrix m = char_matrix(complete_bipartite_graph(4, 4), MatrixKind::Laplacian);
  for (auto _ : state) benchmark::DoNotOptimize(all_minors(m));
}
BENCHMARK(BM_AllMinors);

void BM_IntegralProfile(benchmark::State& state) {
  const Graph g = complete_bipartite_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(determinantal_ideals(g, MatrixKind::Laplacian, Ring::Zx));
}
BENCHMARK(BM_IntegralProfile)->Arg(3)->Arg(4);

void BM_CriticalIdeals(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multivariate_ideals(g, MatrixKind::Adjacency));
}
BENCHMARK(BM_CriticalIdeals)->Arg(4)->Arg(5)->Arg(6);

void BM_SurveyCodetZ(benchmark::State& state) {
  const auto corpus = enumerate_connected(6);
  SurveyOptions opt;
  opt.workers = 1;
  opt.prefilter = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_survey(corpus, MatrixKind::DistLap, SurveyMode::CodetZ, opt));
}
BENCHMARK(BM_SurveyCodetZ)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
