/* SPDX-License-Identifier: Apache-2.0 */

#include <benchmark/benchmark.h>

#include "certeuler/registry.hpp"
#include "certeuler/solver.hpp"

using namespace certeuler;

namespace {

Rational q(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

void BM_RationalAdd(benchmark::State& state) {
  const Rational a = q(355, 113);
  const Rational b = q(-103993, 33102);
  for (auto _ : state) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_RationalAdd);

void BM_RationalMul(benchmark::State& state) {
  const Rational a = q(355, 113);
  const Rational b = q(-103993, 33102);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_RationalMul);

// One application of the circle field at a point with a long denominator.
void BM_ApplyCircle(benchmark::State& state) {
  const bool compress = state.range(0) != 0;
  const UcfVector& f = find_system("circle").rhs;
  const RationalVector x{q(123456789, 1 << 30), q(-987654321, 1 << 30)};
  for (auto _ : state) benchmark::DoNotOptimize(apply(f, q(1, 3), x, Precision(16), compress));
  state.SetLabel(compress ? "compress" : "plain");
}
BENCHMARK(BM_ApplyCircle)->Arg(1)->Arg(0);

void BM_Example1Solve(benchmark::State& state) {
  const EulerProblem problem = make_problem(find_system("exp"));
  const Precision p(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve(problem, p));
}
BENCHMARK(BM_Example1Solve)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

// First 256 circle steps at p = 16; reports the largest slope denominator.
void BM_CircleSteps(benchmark::State& state) {
  const EulerProblem problem = make_problem(find_system("circle"));
  SolveOptions options;
  options.compress = state.range(0) != 0;
  options.max_steps = 256;
  std::size_t bits = 0;
  for (auto _ : state) {
    const EulerSolution sol = solve(problem, Precision(16), options);
    bits = max_slope_denominator_bits(sol);
  }
  state.counters["denominator_bits"] = static_cast<double>(bits);
  state.SetLabel(options.compress ? "compress" : "plain");
}
BENCHMARK(BM_CircleSteps)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
