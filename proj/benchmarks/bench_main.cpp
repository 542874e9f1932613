#include <benchmark/benchmark.h>

#include <random>

#include "qm/instances.hpp"
#include "qm/mk.hpp"
#include "qm/qcms.hpp"

using namespace qm;

static void BM_IntervalDistance(benchmark::State& state) {
  IntervalModel iv(static_cast<int>(state.range(0)));
  const BetaSequence beta = BetaSequence::geometric(0.5);
  const auto mu = random_state(iv.algebra, 1);
  const auto nu = random_state(iv.algebra, 2);
  for (auto _ : state) benchmark::DoNotOptimize(mk_distance(*iv.algebra, beta, mu, nu).value);
}
BENCHMARK(BM_IntervalDistance)->Arg(10)->Arg(16)->Arg(24);

static void BM_CantorDistance(benchmark::State& state) {
  CantorModel c(static_cast<int>(state.range(0)));
  const BetaSequence beta = BetaSequence::geometric(0.5);
  const auto mu = random_state(c.algebra, 1);
  const auto nu = random_state(c.algebra, 2);
  for (auto _ : state) benchmark::DoNotOptimize(mk_distance(*c.algebra, beta, mu, nu).value);
}
BENCHMARK(BM_CantorDistance)->Arg(3)->Arg(5)->Arg(6);

static void BM_UhfExpectation(benchmark::State& state) {
  UhfModel u(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  const Eigen::Index d = u.algebra->dimension();
  ComplexMatrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = {g(rng), g(rng)};
  const Element a = Element::from_matrix(u.algebra, 0.5 * (m + m.adjoint()));
  for (auto _ : state) benchmark::DoNotOptimize(conditional_expectation(*u.algebra, 2, a));
}
BENCHMARK(BM_UhfExpectation)->Arg(3)->Arg(5)->Arg(6);

static void BM_SpectralNorm(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const ComplexMatrix m = ComplexMatrix::Random(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_norm(m));
}
BENCHMARK(BM_SpectralNorm)->Arg(8)->Arg(32)->Arg(64);

static void BM_UhfSeminorm(benchmark::State& state) {
  UhfModel u(static_cast<int>(state.range(0)));
  const BetaSequence beta = BetaSequence::geometric(0.5);
  const Element a = pauli_site(u, u.sites);
  for (auto _ : state) benchmark::DoNotOptimize(lip_seminorm(*u.algebra, beta, a).value);
}
BENCHMARK(BM_UhfSeminorm)->Arg(3)->Arg(5);
BENCHMARK_MAIN();
