#include <benchmark/benchmark.h>

#include "depknap/generator.hpp"
#include "depknap/influence.hpp"

namespace {

using depknap::generate_instance;

void BM_InfluenceMatrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double density = static_cast<double>(state.range(1)) / 100.0;
  const auto inst = generate_instance({n, density, 0.3, 11});
  for (auto _ : state) benchmark::DoNotOptimize(depknap::influence_matrix(inst.vdg));
}
BENCHMARK(BM_InfluenceMatrix)->ArgsProduct({{8, 12, 16}, {10, 30}})->Unit(benchmark::kMicrosecond);

void BM_WalkClosure(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = generate_instance({n, 0.3, 0.3, 11});
  for (auto _ : state) benchmark::DoNotOptimize(depknap::walk_closure(inst.vdg));
}
BENCHMARK(BM_WalkClosure)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

}  // namespace
