#include "gegenmetric/dieudonne.hpp"
#include "gegenmetric/gegenbauer.hpp"
#include "gegenmetric/positivity.hpp"
#include "gegenmetric/symmetric_eigen.hpp"

#include <benchmark/benchmark.h>

namespace gm = gegenmetric;

static void BM_PseudometricBasis(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gm::pseudometric_basis(N));
}
BENCHMARK(BM_PseudometricBasis)->DenseRange(3, 9, 2)->Unit(benchmark::kMillisecond);

static void BM_SolveMetricFixedCoupling(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const gm::RationalMatrix H = gm::evaluate(gm::build_hamiltonian(N), gm::Rational(1));
  std::vector<gm::Rational> row(static_cast<std::size_t>(N), gm::Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(gm::solve_metric(H, row));
}
BENCHMARK(BM_SolveMetricFixedCoupling)->DenseRange(3, 9, 2)->Unit(benchmark::kMicrosecond);

static void BM_SymEigen(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const int digits = static_cast<int>(state.range(1));
  const auto basis = gm::pseudometric_basis(N).at(gm::Rational(1));
  const auto line = gm::default_line(N, gm::Rational(1));
  const auto theta = gm::to_numeric(gm::combine(basis, line.kappa(gm::Rational(1, 3))), digits);
  for (auto _ : state) benchmark::DoNotOptimize(gm::sym_eigen(theta, digits, true));
}
BENCHMARK(BM_SymEigen)->ArgsProduct({{3, 7, 9}, {20, 50, 100}})->Unit(benchmark::kMicrosecond);

static void BM_ScanDomain(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto basis = gm::pseudometric_basis(N).at(gm::Rational(1));
  auto line = gm::default_line(N, gm::Rational(1));
  line.grid_points = 101;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gm::scan_domain(basis, gm::Rational(1), line, 50, gm::default_refine_tol()));
  }
}
BENCHMARK(BM_ScanDomain)->Arg(3)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_SecularRoots(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gm::secular_roots(N, gm::Rational(1), 50));
}
BENCHMARK(BM_SecularRoots)->DenseRange(4, 16, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
