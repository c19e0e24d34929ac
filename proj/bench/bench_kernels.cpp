// Serial reference vs OpenMP kernels. Run with --benchmark_filter to pick one.

#include "lacunae/closed_form.hpp"
#include "lacunae/lacunary.hpp"
#include "lacunae/verify.hpp"

#include <benchmark/benchmark.h>

using namespace lacunae;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_ClosedFormHKL(benchmark::State& state) {
  const auto K = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_HKL(K, 2, 12, mode(state)));
  state.SetLabel(mode(state) == Exec::serial ? "serial" : "parallel");
}

void BM_SeriesMul(benchmark::State& state) {
  const LambdaSeries a = hermite_egf(40);
  const LambdaSeries b = closed_form_HK0(3, 40, Exec::serial);
  for (auto _ : state) benchmark::DoNotOptimize(series_mul(a, b, mode(state)));
  state.SetLabel(mode(state) == Exec::serial ? "serial" : "parallel");
}

void BM_EvaluateResummed(benchmark::State& state) {
  const CoeffTable dense = random_dense_table(7);
  const ResummedSeries plan = corollary1_plan(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_resummed(plan, dense, 8, {Part::even, Part::odd, Part::mixed}, mode(state)));
  }
  state.SetLabel(mode(state) == Exec::serial ? "serial" : "parallel");
}

void BM_Verification(benchmark::State& state) {
  VerifyConfig cfg;
  cfg.k_range = {2, 6};
  cfg.l_range = {0, 3};
  cfg.n_max = 6;
  for (auto _ : state) benchmark::DoNotOptimize(run_verification(cfg, mode(state)));
  state.SetLabel(mode(state) == Exec::serial ? "serial" : "parallel");
}

}  // namespace

BENCHMARK(BM_ClosedFormHKL)->ArgsProduct({{0, 1}, {4, 7}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeriesMul)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateResummed)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Verification)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
