#include <benchmark/benchmark.h>

#include "tmills/bounds.hpp"
#include "tmills/student_t.hpp"
#include "tmills/verify.hpp"

namespace {

void BM_LnGamma(benchmark::State& state) {
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tmills::ln_gamma(x));
    x += 1e-9;
  }
}
BENCHMARK(BM_LnGamma);

void BM_RegIncBeta(benchmark::State& state) {
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tmills::reg_inc_beta(x, 2.5, 0.5));
    x = x < 0.9 ? x + 1e-9 : 0.3;
  }
}
BENCHMARK(BM_RegIncBeta);

void BM_TailBeta(benchmark::State& state) {
  const tmills::TDist d(static_cast<double>(state.range(0)));
  double a = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tmills::tail(d, a));
    a = a < 50.0 ? a + 1e-9 : 1.0;
  }
}
BENCHMARK(BM_TailBeta)->Arg(1)->Arg(100);

void BM_TailQuadrature(benchmark::State& state) {
  const tmills::TDist d(static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tmills::tail_quadrature(d, 1.0, 1e-12));
  }
}
BENCHMARK(BM_TailQuadrature)->Arg(1)->Arg(100);

void BM_MillsRatio(benchmark::State& state) {
  const tmills::TDist d(3.0);
  double a = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tmills::mills_ratio(d, a));
    a = a < 20.0 ? a + 1e-9 : 0.0;
  }
}
BENCHMARK(BM_MillsRatio);

void BM_KConstant(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tmills::k_constant(1e-4, 1e6, state.range(0)));
  }
}
BENCHMARK(BM_KConstant)->Arg(1000)->Arg(4000);

void BM_CorollarySweep(benchmark::State& state) {
  tmills::SweepConfig cfg = tmills::default_config(tmills::Suite::corollary);
  cfg.nu_grid = tmills::log_grid(1e-4, 1e4, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tmills::sweep_corollary(cfg));
  }
}
BENCHMARK(BM_CorollarySweep)->Arg(10)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
