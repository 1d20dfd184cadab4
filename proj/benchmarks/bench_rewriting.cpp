#include <benchmark/benchmark.h>

#include "mcdlo/eval.hpp"
#include "mcdlo/models.hpp"
#include "mcdlo/parser.hpp"
#include "mcdlo/rewriting.hpp"

using namespace mcdlo;

namespace {

void BM_PositiveRewrite(benchmark::State& state) {
  const auto f = syntax::parse_formula("(or (not (= (msinv A B) A)) (not (at (setminus A B))))",
                                       syntax::Signature::wso().with_extensions());
  for (auto _ : state) benchmark::DoNotOptimize(rewriting::qf_positive_rewrite(f));
}
BENCHMARK(BM_PositiveRewrite);

void BM_SinvCharacterizationEval(benchmark::State& state) {
  const auto f = rewriting::sinv_characterization(syntax::var("A"), syntax::var("B"), syntax::var("C"), {});
  std::vector<Rat> pts;
  const auto n = state.range(0);
  for (long j = 0; j < n; ++j) pts.emplace_back(j, n);
  const models::LciGrid g{FinSet(pts)};
  const auto full = g.encode(IntervalUnion::from_finset(FinSet(pts)));
  for (auto _ : state) benchmark::DoNotOptimize(eval::eval_in(g, f, {{"A", full}, {"B", full}, {"C", full}}));
}
BENCHMARK(BM_SinvCharacterizationEval)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

}  // namespace
