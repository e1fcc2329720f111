// Batched Fourier evaluation: serial reference against the OpenMP kernel.

#include "polyspec/kernels.hpp"
#include "polyspec/shapes.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

using namespace polyspec;

namespace {

std::vector<Frequency> frequencies(std::size_t d, std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-20, 20);
  std::vector<Frequency> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> x(d);
    for (auto& c : x) c = u(rng);
    out.push_back(Frequency::floating(x));
  }
  return out;
}

Polytope body(int which) {
  switch (which) {
    case 0:
      return shapes::l_tromino();
    case 1:
      return shapes::unit_cube(3);
    default:
      return shapes::unit_cells(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  }
}

void BM_serial(benchmark::State& state) {
  const auto a = body(static_cast<int>(state.range(0)));
  const auto plan = MeasurePlan::indicator(a);
  const auto xis = frequencies(a.dim(), static_cast<std::size_t>(state.range(1)));
  Precision p;
  p.bits = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_batch_serial(plan, xis, p));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_parallel(benchmark::State& state) {
  const auto a = body(static_cast<int>(state.range(0)));
  const auto plan = MeasurePlan::indicator(a);
  const auto xis = frequencies(a.dim(), static_cast<std::size_t>(state.range(1)));
  Precision p;
  p.bits = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_batch(plan, xis, p));
  state.SetItemsProcessed(state.iterations() * state.range(1));
  state.counters["threads"] = omp_get_max_threads();
}

// Args: body (0 = L-tromino, 1 = cube, 2 = four unit cubes), batch size, precision bits.
void args(benchmark::internal::Benchmark* b) {
  for (int which : {0, 1, 2}) {
    for (int bits : {53, 113}) b->Args({which, 1024, bits});
  }
}

BENCHMARK(BM_serial)->Apply(args)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->Apply(args)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
