#include <benchmark/benchmark.h>

#include "birel/bisim.hpp"
#include "birel/proof.hpp"
#include "birel/search.hpp"
#include "birel/semantics.hpp"
#include "birel/transform.hpp"
#include "support.hpp"

using namespace birel;

static void BM_Eval(benchmark::State& state) {
  testing::Rng rng(1);
  auto m = testing::random_bi_model(rng, static_cast<std::size_t>(state.range(0)));
  Formula f = testing::random_formula(rng, 6, testing::default_props());
  for (auto _ : state) benchmark::DoNotOptimize(eval(m, f));
}
BENCHMARK(BM_Eval)->Arg(4)->Arg(16)->Arg(64);

static void BM_GreatestBisimulation(benchmark::State& state) {
  testing::Rng rng(2);
  auto m = testing::random_bi_model(rng, static_cast<std::size_t>(state.range(0)));
  auto sigma = testing::random_sigma(rng, 8);
  for (auto _ : state) benchmark::DoNotOptimize(greatest_bisimulation(m, sigma, state.range(1) != 0));
}
BENCHMARK(BM_GreatestBisimulation)->Args({8, 0})->Args({8, 1})->Args({32, 0})->Args({32, 1});

static void BM_Linearize(benchmark::State& state) {
  testing::Rng rng(3);
  auto m = testing::random_gs4_model(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(linearize_gs4(m));
}
BENCHMARK(BM_Linearize)->Arg(8)->Arg(24);

static void BM_FindCountermodel(benchmark::State& state) {
  const Formula& f = schema(AxiomName::FOUR_BOX);
  SearchOptions o;
  o.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_countermodel(f, FrameClass::CS4, 3, o));
}
BENCHMARK(BM_FindCountermodel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_IpcDecide(benchmark::State& state) {
  Formula f = parse("((p -> q) -> r) & (p | q -> r) -> ((q -> p) -> r) | (p & q -> r)");
  for (auto _ : state) benchmark::DoNotOptimize(ipc_decide(f));
}
BENCHMARK(BM_IpcDecide);
BENCHMARK_MAIN();
