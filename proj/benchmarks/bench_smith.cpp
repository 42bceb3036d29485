#include "gradedk/invariants.hpp"
#include "gradedk/random.hpp"
#include "gradedk/smith.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  gradedk::Rng rng(42);
  const auto m = gradedk::random_matrix(rng, n, n, -9, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gradedk::smith_normal_form(m));
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(3)->Arg(6)->Arg(12)->Arg(24)->Arg(48);

void BM_DeterminantalDivisors(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  gradedk::Rng rng(42);
  const auto m = gradedk::random_matrix(rng, n, n, -9, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gradedk::determinantal_divisors(m));
  }
}
BENCHMARK(BM_DeterminantalDivisors)->Arg(3)->Arg(4)->Arg(6);

void BM_GradedKTheoryRandomGraph(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  gradedk::Rng rng(7);
  const auto g = gradedk::random_graph(rng, n, 3 * n);
  const auto p = gradedk::make_problem(g, gradedk::regular_vertices(g));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gradedk::graded_k_theory(p));
  }
}
BENCHMARK(BM_GradedKTheoryRandomGraph)->Arg(6)->Arg(20)->Arg(60);

void BM_SmithLargeGrowth(benchmark::State& state) {
  // Dense random entries in a wide range exercise bignum growth.
  const auto n = static_cast<std::size_t>(state.range(0));
  gradedk::Rng rng(3);
  const auto m = gradedk::random_matrix(rng, n, n, -1000000, 1000000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gradedk::smith_normal_form(m));
  }
}
BENCHMARK(BM_SmithLargeGrowth)->Arg(8)->Arg(16);

}  // namespace
BENCHMARK_MAIN();
