#include <benchmark/benchmark.h>

#include <bsurf/deform.hpp>
#include <bsurf/rh.hpp>
#include <bsurf/sigma.hpp>

using namespace bsurf;

static void BM_PolyRoots(benchmark::State& state) {
  std::vector<Complex> c;
  for (int k = 0; k <= state.range(0); ++k) c.emplace_back(std::cos(1.3 * k), std::sin(0.7 * k + 1));
  const Polynomial p(c);
  for (auto _ : state) benchmark::DoNotOptimize(poly_roots(p));
}
BENCHMARK(BM_PolyRoots)->Arg(4)->Arg(16)->Arg(64);

static void BM_RHSolveDisc(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const BoundaryData d{PlanarDomain::disc(), [k](std::size_t, Complex z) { return std::pow(z, k); }, nullptr};
  const int modes = 4 * k + 8;
  const RHProblem p = d.sample(4 * modes);
  for (auto _ : state) benchmark::DoNotOptimize(rh_solve(p, modes));
}
BENCHMARK(BM_RHSolveDisc)->DenseRange(0, 4);

static void BM_RHSolveAnnulus(benchmark::State& state) {
  const BoundaryData d{PlanarDomain::annulus(0.5), [](std::size_t l, Complex z) { return l == 0 ? z * z : Complex(1); },
                       nullptr};
  const int modes = static_cast<int>(state.range(0));
  const RHProblem p = d.sample(4 * modes);
  for (auto _ : state) benchmark::DoNotOptimize(rh_solve(p, modes));
}
BENCHMARK(BM_RHSolveAnnulus)->Arg(16)->Arg(64);

static void BM_SigmaFiber(benchmark::State& state) {
  const SigmaVariety v(make_separating_data(BlaschkeProduct({0.0, 0.0}), Polynomial{0.0, 1.0, 0.0, -1.0},
                                            Polynomial::monomial(3)));
  Complex z(0.3, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(v.fiber(z));
}
BENCHMARK(BM_SigmaFiber);

static void BM_NewtonContinue(benchmark::State& state) {
  const BlaschkeProduct f0({0.0, 0.3, Complex(-0.25, 0.2)});
  for (auto _ : state)
    benchmark::DoNotOptimize(newton_continue({RhoFamily::Mixed, 0.01}, f0, Polynomial{0.0, 0.5}));
}
BENCHMARK(BM_NewtonContinue)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
