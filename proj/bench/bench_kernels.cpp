// Serial reference vs OpenMP paths of the two data-parallel kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "bqcert/certify.hpp"
#include "bqcert/numeric_search.hpp"

using namespace bqcert;

namespace {

Execution mode(const benchmark::State& s) { return s.range(0) ? Execution::Parallel : Execution::Serial; }

void BM_RefineStarts(benchmark::State& state) {
  const auto f = numeric::det_phi_numeric(2.0);
  const auto starts = numeric::fibonacci_hemisphere(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(numeric::refine_starts(f, starts, {}, mode(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_EnumerateXZeros(benchmark::State& state) {
  numeric::EnumerationOptions opts;
  opts.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(numeric::enumerate_x_zeros(-5.0 / 7.0, opts));
}

void BM_PsdVerdicts(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
  std::vector<RatVector> pts(static_cast<std::size_t>(state.range(1)));
  for (auto& p : pts) p = {Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(1 + num(rng) % 7, den(rng))};
  const auto map = build_phi_t(Rational(3, 2));
  for (auto _ : state) benchmark::DoNotOptimize(psd_verdicts(map, pts, mode(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

}  // namespace

BENCHMARK(BM_RefineStarts)->ArgNames({"parallel", "starts"})->ArgsProduct({{0, 1}, {500, 4000}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateXZeros)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PsdVerdicts)->ArgNames({"parallel", "points"})->ArgsProduct({{0, 1}, {1000, 10000}})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
