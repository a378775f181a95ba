#include <benchmark/benchmark.h>

#include "mg/cs_theory.hpp"
#include "mg/determinantal.hpp"
#include "mg/gin.hpp"
#include "mg/groebner.hpp"

namespace {

mg::Ideal maximal_minors(std::size_t m, std::vector<int> blocks, std::uint64_t seed) {
  const auto a = mg::build_column_graded(m, blocks, seed);
  return mg::Ideal(a.ring(), mg::minors(a, m));
}

/// Reduced GB of the 2-minors of a generic 3 x n matrix.
void BM_BuchbergerGenericTwoMinors(benchmark::State& state) {
  const auto x = mg::generic_matrix(3, static_cast<std::size_t>(state.range(0)));
  const auto gens = mg::minors(x, 2);
  const auto order = mg::TermOrder::degrevlex(x.ring());
  for (auto _ : state) {
    benchmark::DoNotOptimize(mg::buchberger(x.ring(), gens, order, {}));
  }
}
BENCHMARK(BM_BuchbergerGenericTwoMinors)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BuchbergerColumnMaximalMinorsLex(benchmark::State& state) {
  const auto i = maximal_minors(3, {3, 3, 3, 3}, 5);
  const auto order = mg::TermOrder::lex(i.ring());
  for (auto _ : state) {
    benchmark::DoNotOptimize(mg::buchberger(i.ring(), i.generators(), order, {}));
  }
}
BENCHMARK(BM_BuchbergerColumnMaximalMinorsLex)->Unit(benchmark::kMillisecond);

void BM_Gin(benchmark::State& state) {
  const auto i = maximal_minors(2, {2, 3, 2}, 3);
  const auto order = mg::TermOrder::degrevlex(i.ring());
  for (auto _ : state) {
    benchmark::DoNotOptimize(mg::gin(i, order, {.trials = 1, .seed = 1}));
  }
}
BENCHMARK(BM_Gin)->Unit(benchmark::kMillisecond);

void BM_HilbertNumerator(benchmark::State& state) {
  const auto x = mg::generic_matrix(3, 4);
  const mg::Ideal i(x.ring(), mg::minors(x, 2));
  const auto in = mg::initial_ideal(i, mg::TermOrder::degrevlex(x.ring()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mg::hilbert_numerator(in));
  }
}
BENCHMARK(BM_HilbertNumerator)->Unit(benchmark::kMicrosecond);

void BM_UgbCheck(benchmark::State& state) {
  const auto i = maximal_minors(2, {2, 2, 2}, 7);
  const auto orders = mg::sample_orders(i.ring(), static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mg::ugb_check(i.generators(), i, orders));
  }
}
BENCHMARK(BM_UgbCheck)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
