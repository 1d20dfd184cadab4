#include <benchmark/benchmark.h>

#include "mcdlo/fefvau.hpp"
#include "mcdlo/parser.hpp"

using namespace mcdlo;

namespace {

syntax::Formula mo(const char* text) { return syntax::parse_formula(text, syntax::Signature::mo().with_extensions()); }

void BM_FvReduceAtomic(benchmark::State& state) {
  const auto f = mo("(ltE X Y)");
  for (auto _ : state) benchmark::DoNotOptimize(fefvau::fv_reduce(fefvau::to_power(f)));
}
BENCHMARK(BM_FvReduceAtomic);

void BM_FvReduceQuantified(benchmark::State& state) {
  const auto f = mo("(exists Z (and (at Z) (and (ltE X Z) (not (subset Z Y)))))");
  for (auto _ : state) benchmark::DoNotOptimize(fefvau::fv_reduce(fefvau::to_power(f)));
}
BENCHMARK(BM_FvReduceQuantified);

void BM_TranslateWithParameters(benchmark::State& state) {
  const auto f = mo("(forall Z (exists W (and (subset Z W) (subset X W))))");
  const auto oracle = fefvau::grid_oracle();
  for (auto _ : state) benchmark::DoNotOptimize(fefvau::translate_with_parameters(f, {"X"}, oracle));
}
BENCHMARK(BM_TranslateWithParameters)->Unit(benchmark::kMillisecond);

}  // namespace
