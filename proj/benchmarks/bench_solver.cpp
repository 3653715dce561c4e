#include <benchmark/benchmark.h>

#include "depknap/generator.hpp"
#include "depknap/influence.hpp"
#include "depknap/solver.hpp"

namespace {

using depknap::generate_instance;

void BM_SolveBnb(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = generate_instance({n, 0.1, 0.3, 23});
  const auto m = depknap::influence_matrix(inst.vdg);
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const auto r = depknap::solve_bnb(inst, m);
    nodes = r.nodes_explored;
    benchmark::DoNotOptimize(r.objective);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_SolveBnb)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_SolveExhaustive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = generate_instance({n, 0.1, 0.3, 23});
  const auto m = depknap::influence_matrix(inst.vdg);
  for (auto _ : state) benchmark::DoNotOptimize(depknap::solve_exhaustive(inst, m).objective);
}
BENCHMARK(BM_SolveExhaustive)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

}  // namespace
