#include <benchmark/benchmark.h>

#include "qrkit/binom_sums.hpp"
#include "qrkit/gaussian.hpp"
#include "qrkit/lucas.hpp"
#include "qrkit/quadratic_forms.hpp"
#include "qrkit/two_squares.hpp"
#include "qrkit/verifier.hpp"

using namespace qrkit;

namespace {

void BM_quartic_jacobi_inert(benchmark::State& state) {
  uint64_t p = 1000003;  // 3 mod 4
  for (auto _ : state)
    benchmark::DoNotOptimize(quartic_jacobi({12345, 6789}, p));
}
BENCHMARK(BM_quartic_jacobi_inert);

void BM_quartic_jacobi_split(benchmark::State& state) {
  uint64_t p = 1000033;  // 1 mod 4
  for (auto _ : state)
    benchmark::DoNotOptimize(quartic_jacobi({12345, 6789}, p));
}
BENCHMARK(BM_quartic_jacobi_split);

void BM_sum_main(benchmark::State& state) {
  SumEvaluator ev(9973);
  for (auto _ : state) benchmark::DoNotOptimize(ev.sum(SumKind::Main, 1234));
}
BENCHMARK(BM_sum_main);

void BM_sum_center_tables(benchmark::State& state) {
  SumEvaluator ev(9973);
  for (auto _ : state)
    benchmark::DoNotOptimize(ev.sum_tables(SumKind::Center, 1234));
}
BENCHMARK(BM_sum_center_tables);

void BM_lucas_fast(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(lucas_uv(uint64_t(state.range(0)), 3, 7, 99991));
}
BENCHMARK(BM_lucas_fast)->Arg(10000)->Arg(100000000);

void BM_lucas_naive(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        lucas_uv_naive(uint64_t(state.range(0)), 3, 7, 99991));
}
BENCHMARK(BM_lucas_naive)->Arg(10000);

void BM_decompose(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(decompose(999999937));
}
BENCHMARK(BM_decompose);

void BM_reduced_forms(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reduced_forms(-768));
}
BENCHMARK(BM_reduced_forms);

void BM_verify_sweep(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(verify(TheoremId::T2_1a, 300, 10));
}
BENCHMARK(BM_verify_sweep);

}  // namespace

BENCHMARK_MAIN();
