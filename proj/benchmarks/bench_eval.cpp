#include <benchmark/benchmark.h>

#include "mcdlo/eval.hpp"
#include "mcdlo/parser.hpp"

using namespace mcdlo;

namespace {

const syntax::Formula& linear_order() {
  static const auto f = syntax::parse_formula(
      "(forall X (forall Y (implies (and (at X) (and (at Y) (not (= X Y)))) (or (ltE X Y) (ltE Y X)))))",
      syntax::Signature::mo());
  return f;
}

void BM_BruteforceMso(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eval::bruteforce_eval(n, linear_order(), {}));
}
BENCHMARK(BM_BruteforceMso)->DenseRange(2, 10, 2);

void BM_GridEval(benchmark::State& state) {
  const auto f = syntax::parse_formula("(exists Y (and (= (inter X Y) X) (not (= X Y))))",
                                       syntax::Signature::wso().with_extensions());
  const models::Assignment<FinSet> a{{"X", FinSet{Rat(0), Rat(1, 2)}}};
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eval::grid_eval(f, a, k));
}
BENCHMARK(BM_GridEval)->DenseRange(1, 4);

}  // namespace
