#include <benchmark/benchmark.h>

#include "rosenmorse/ladder.hpp"
#include "rosenmorse/oracles.hpp"
#include "rosenmorse/wavefn.hpp"

namespace {

using namespace rosenmorse;

// Arg: alpha. Beta is fixed at 0.5 so every step carries a Weyl shift.
void BM_RaisingChain(benchmark::State& state) {
  const PotentialParams p{static_cast<double>(state.range(0)) + 0.3, 0.5, {}};
  const int top = count_bound_states(p) - 1;
  for (auto _ : state) {
    ShiftedPolynomial c = ShiftedPolynomial::from_doubles(jacobi_params(exponents(p, 0)), {1.0});
    for (int n = 0; n < top; ++n) c = raise_general(c, p, n);
    benchmark::DoNotOptimize(c);
  }
  state.counters["states"] = top + 1;
}
BENCHMARK(BM_RaisingChain)->Arg(3)->Arg(5)->Arg(10)->Arg(25);

void BM_ThreeTermCoefficients(benchmark::State& state) {
  const PotentialParams p{static_cast<double>(state.range(0)) + 0.3, 0.5, {}};
  const int count = count_bound_states(p);
  for (auto _ : state) {
    for (int n = 0; n < count; ++n) {
      const JacobiParams j = jacobi_params(exponents(p, n));
      benchmark::DoNotOptimize(oracles::jacobi_three_term_coeffs(j.A, j.B, n));
    }
  }
  state.counters["states"] = count;
}
BENCHMARK(BM_ThreeTermCoefficients)->Arg(3)->Arg(5)->Arg(10)->Arg(25);

void BM_SymmetricChain(benchmark::State& state) {
  const double alpha = static_cast<double>(state.range(0)) + 0.3;
  for (auto _ : state) {
    TanhPolynomial t = seed_symmetric(alpha);
    while (alpha - (t.n + 1) > 1e-12) t = raise_symmetric(t);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_SymmetricChain)->Arg(3)->Arg(10)->Arg(25);

// Arg: state index at alpha = 25.3.
void BM_EvalState(benchmark::State& state) {
  const Eigenstate s = build_state({25.3, 0.5, {}}, static_cast<int>(state.range(0)));
  double x = -4.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_state(s, x));
    x = x > 4.0 ? -4.0 : x + 0.01;
  }
}
BENCHMARK(BM_EvalState)->Arg(0)->Arg(5)->Arg(20);

void BM_Residual(benchmark::State& state) {
  const Eigenstate s = build_state({25.3, 0.5, {}}, static_cast<int>(state.range(0)));
  double x = -4.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(schrodinger_residual(s, x));
    x = x > 4.0 ? -4.0 : x + 0.01;
  }
}
BENCHMARK(BM_Residual)->Arg(5)->Arg(20);

void BM_FdEigensolver(benchmark::State& state) {
  const PotentialParams p{3.3, 0.5, {}};
  const oracles::Grid1D grid{16.0, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(oracles::fd_eigensolver(p, grid));
}
BENCHMARK(BM_FdEigensolver)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
