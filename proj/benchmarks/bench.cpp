#include <benchmark/benchmark.h>

#include <random>

#include "lcheck/casebook.hpp"
#include "lcheck/dseries.hpp"
#include "lcheck/expr.hpp"
#include "lcheck/repalg.hpp"
#include "lcheck/satake.hpp"

namespace {

using namespace lcheck;

void BM_CoeffPolyD(benchmark::State& state) {
  const auto& d = build_D();
  for (auto _ : state) benchmark::DoNotOptimize(coeff_poly(d, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CoeffPolyD)->Arg(1)->Arg(4);

void BM_VerifySos(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_sos());
}
BENCHMARK(BM_VerifySos)->Unit(benchmark::kMillisecond);

void BM_NormalizeD(benchmark::State& state) {
  auto raw = parse_expression(kAuxSeriesText);
  for (auto _ : state) benchmark::DoNotOptimize(normalize(raw));
}
BENCHMARK(BM_NormalizeD);

void BM_VerifyCase(benchmark::State& state) {
  const auto& c = builtin_case("4.3");
  for (auto _ : state) benchmark::DoNotOptimize(verify_case(c));
}
BENCHMARK(BM_VerifyCase)->Unit(benchmark::kMillisecond);

void BM_EvalD(benchmark::State& state) {
  std::mt19937_64 rng(1);
  auto pt = random_point(rng);
  for (auto _ : state) benchmark::DoNotOptimize(a_D(pt, 4));
}
BENCHMARK(BM_EvalD);

void BM_Scan(benchmark::State& state) {
  const auto x = state.range(0);
  auto f1 = delta_eigenvalues(x);
  auto f2 = x0_11_eigenvalues(x);
  auto chi = kronecker_character(-4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_positivity(
        f1, f2, chi, {.xmax = x, .lmax = 4, .threads = static_cast<unsigned>(state.range(1))}));
  }
}
BENCHMARK(BM_Scan)->Args({10000, 1})->Args({10000, 4})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
