#include <benchmark/benchmark.h>

#include "osq/dilation.hpp"
#include "osq/fft.hpp"
#include "osq/instances.hpp"
#include "osq/quadrature.hpp"
#include "osq/rphs.hpp"

using namespace osq;

static void BM_Fft(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<cdouble> data(n);
  CheckRng rng(1, "bench.fft");
  for (auto& v : data) v = rng.complex_normal();
  for (auto _ : state) {
    auto copy = data;
    dft_pow2(copy, false);
    benchmark::DoNotOptimize(copy.data());
  }
}
BENCHMARK(BM_Fft)->Arg(1 << 12)->Arg(1 << 14)->Arg(1 << 16);

static void BM_PoissonFourier(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(poisson_fourier(1.0, 2.5));
}
BENCHMARK(BM_PoissonFourier);

static void BM_DilationBuild(benchmark::State& state) {
  const Grid grid = Grid::uniform(256.0, static_cast<std::size_t>(state.range(0)));
  const auto rho = SpectralMeasure::from_atoms({{0.5, 1.0}, {1.0, 1.0}, {2.0, 1.0}, {5.0, 1.0}});
  for (auto _ : state) {
    DilationSpace sp(rho, grid);
    benchmark::DoNotOptimize(&sp);
  }
}
BENCHMARK(BM_DilationBuild)->Arg(1 << 12)->Arg(1 << 14);

static void BM_SemigroupIdentity(benchmark::State& state) {
  const Grid grid = Grid::uniform(256.0, 1 << 14);
  DilationSpace sp(SpectralMeasure::from_atoms({{0.5, 1.0}, {1.0, 1.0}, {2.0, 1.0}, {5.0, 1.0}}), grid);
  for (auto _ : state) benchmark::DoNotOptimize(verify_semigroup_identity(sp, 1.0).residual);
}
BENCHMARK(BM_SemigroupIdentity);

static void BM_Quotient(benchmark::State& state) {
  CheckRng rng(2, "bench.quotient");
  ReflectionSpace space = random_reflection_space(rng, 24, 30, 4);
  for (auto _ : state) {
    auto q = quotient_space(space);
    benchmark::DoNotOptimize(q.hat_dim);
  }
}
BENCHMARK(BM_Quotient);

static void BM_ProjectPlus(benchmark::State& state) {
  const Grid grid = Grid::uniform(256.0, 1 << 14);
  DilationSpace sp(SpectralMeasure::dirac(1.0), grid);
  CheckRng rng(3, "bench.project");
  DilationVector f = random_plus_vector(rng, sp);
  for (auto _ : state) {
    auto p = project_plus(f);
    benchmark::DoNotOptimize(p.values.data());
  }
}
BENCHMARK(BM_ProjectPlus);

BENCHMARK_MAIN();
