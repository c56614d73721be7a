#include <benchmark/benchmark.h>

#include "saea/engine.hpp"
#include "saea/fitness.hpp"
#include "saea/mutation.hpp"
#include "saea/random.hpp"

using namespace saea;

static void BM_BitwiseMutate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double chi = static_cast<double>(state.range(1)) / 10.0;
  RandomStream rng(1, {0, 0, 0});
  Genome x(n);
  for (auto _ : state) {
    bitwise_mutate_in_place(x, chi, rng);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_BitwiseMutate)->Args({100, 4})->Args({1000, 4})->Args({1000, 40});

static void BM_LeadingOnes(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Genome x = Genome::ones(n);
  for (auto _ : state) benchmark::DoNotOptimize(leading_ones(x));
}
BENCHMARK(BM_LeadingOnes)->Arg(100)->Arg(1000)->Arg(10000);

// A short LeadingOnes run; items processed counts evaluations.
static void BM_SelfAdaptiveRun(benchmark::State& state) {
  const std::size_t n = 100;
  const auto lambda = static_cast<std::size_t>(state.range(0));
  const RunConfig config{n,
                         lambda,
                         SelectionMechanism::mu_comma(lambda / 8),
                         MutationStrategy::self_adaptive(RateSet({0.4, 4.0}, n), 0.05),
                         FitnessFunction::leading_ones(n),
                         UniformInit{},
                         20,
                         1};
  std::uint64_t evaluations = 0;
  std::uint64_t trial = 0;
  for (auto _ : state) {
    const RunResult r = run(config, trial++);
    evaluations += r.evaluations;
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(evaluations));
}
BENCHMARK(BM_SelfAdaptiveRun)->Arg(320)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
