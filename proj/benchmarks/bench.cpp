#include <benchmark/benchmark.h>

#include <memory>

#include "asimkit/enumerate.hpp"
#include "asimkit/evaluator.hpp"
#include "asimkit/invariance.hpp"
#include "asimkit/parser.hpp"
#include "asimkit/simulation.hpp"
#include "asimkit/translation.hpp"

using namespace asimkit;

namespace {

std::vector<std::shared_ptr<const Model>> models(std::size_t worlds) {
  std::vector<std::shared_ptr<const Model>> out;
  for (auto& m : enumerate_models(worlds, Vocabulary{1}, false)) out.push_back(std::make_shared<const Model>(std::move(m)));
  return out;
}

// A chain of n worlds with P1 at every other world.
std::shared_ptr<const Model> chain(std::size_t n) {
  ModelSpec spec;
  spec.vocab = Vocabulary{1};
  for (std::size_t i = 0; i < n; ++i) spec.worlds.push_back("w" + std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i) spec.rel.emplace_back(spec.worlds[i], spec.worlds[i + 1]);
  for (std::size_t i = 0; i < n; i += 2) spec.val[1].push_back(spec.worlds[i]);
  return std::make_shared<const Model>(spec);
}

}  // namespace

static void BM_GreatestAsimulation(benchmark::State& state) {
  const auto m = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(greatest_asimulation(*m, *m));
}
BENCHMARK(BM_GreatestAsimulation)->Arg(8)->Arg(32)->Arg(64);

static void BM_Stratified(benchmark::State& state) {
  const auto m = chain(32);
  for (auto _ : state) benchmark::DoNotOptimize(stratified_k_asim(*m, *m, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Stratified)->Arg(2)->Arg(8);

static void BM_AllPairsK2(benchmark::State& state) {
  const auto family = models(2);
  for (auto _ : state) {
    std::size_t hits = 0;
    for (const auto& l : family) {
      for (const auto& r : family) hits += stratified_k_asim(*l, *r, 2).layers.back().size();
    }
    benchmark::DoNotOptimize(hits);
  }
}
BENCHMARK(BM_AllPairsK2);

static void BM_EnumerateModels(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_models(static_cast<std::size_t>(state.range(0)), Vocabulary{1}, false));
  }
}
BENCHMARK(BM_EnumerateModels)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_Repertoire(benchmark::State& state) {
  const auto probe = all_points(models(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_int_formulas(Vocabulary{1}, static_cast<std::size_t>(state.range(0)), probe));
  }
}
BENCHMARK(BM_Repertoire)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_PointEvaluator(benchmark::State& state) {
  const auto family = models(3);
  const PointEvaluator eval(st(parse_int("((p1 -> false) -> p1) -> p1")));
  for (auto _ : state) {
    std::size_t count = 0;
    for (const auto& m : family) {
      for (bool b : eval.extension(*m)) count += b;
    }
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_PointEvaluator)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
