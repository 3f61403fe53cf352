#include <benchmark/benchmark.h>

#include <vector>

#include "littlewood/ball_geometry.hpp"
#include "littlewood/lemmata.hpp"
#include "littlewood/littlewood_opt.hpp"
#include "littlewood/norm_oracle.hpp"
#include "littlewood/parallel.hpp"

using namespace littlewood;

namespace {

std::vector<FormCoefficients> forms(std::size_t n, bool in_ball = false) {
  auto rng = block_stream(99, 0);
  std::vector<FormCoefficients> out;
  while (out.size() < n) {
    FormCoefficients t(uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1));
    if (in_ball) {
      const double v = norm_real(t).value;
      if (v > 1.0) t = t.scaled(0.999 / v);
    }
    out.push_back(t);
  }
  return out;
}

void BM_NormReal(benchmark::State& state) {
  const auto fs = forms(1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(norm_real(fs[i++ & 1023]));
}
BENCHMARK(BM_NormReal);

void BM_NormComplex(benchmark::State& state) {
  const auto fs = forms(1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(norm_complex_real_coeffs(fs[i++ & 1023]));
}
BENCHMARK(BM_NormComplex);

void BM_OracleComplex(benchmark::State& state) {
  const auto fs = forms(64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(oracle_norm_complex(fs[i++ & 63]));
}
BENCHMARK(BM_OracleComplex);

void BM_SplitWitness(benchmark::State& state) {
  const auto fs = forms(1024, true);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(split_witness(fs[i++ & 1023]));
}
BENCHMARK(BM_SplitWitness);

void BM_MonomaxCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(monomax_check(1.0, -2.0, 1.0, 2.0));
}
BENCHMARK(BM_MonomaxCheck);

void BM_GridScan(benchmark::State& state) {
  ScanConfig cfg;
  cfg.step = 1.0 / static_cast<double>(state.range(0));
  cfg.field = state.range(1) ? ScalarField::ComplexRealCoeffs : ScalarField::Real;
  for (auto _ : state) benchmark::DoNotOptimize(grid_scan(cfg).max_ratio);
}
BENCHMARK(BM_GridScan)->Args({2, 0})->Args({10, 0})->Args({10, 1})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
