#include <benchmark/benchmark.h>

#include "oscrep/probe.hpp"

using namespace oscrep;

static void BM_Compose(benchmark::State& state) {
  const LieAlgebraSpec spec(Parity::Odd, static_cast<int>(state.range(0)));
  const auto rep = RepFamily::conformal(spec, Scalar::parameter());
  const auto x = image(rep, BasisLabel{Family::A, 1, spec.n + 1});
  const auto y = image(rep, BasisLabel{Family::C, 1, spec.n + 1});
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_Compose)->Arg(1)->Arg(2)->Arg(3);

static void BM_SymbolicHomomorphism(benchmark::State& state) {
  const LieAlgebraSpec spec(Parity::Even, static_cast<int>(state.range(0)));
  const auto rep = RepFamily::swapped(spec, Scalar::parameter(), 1, spec.n);
  for (auto _ : state) benchmark::DoNotOptimize(verify_homomorphism(rep, CheckMode::Symbolic));
}
BENCHMARK(BM_SymbolicHomomorphism)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_AppliedHomomorphism(benchmark::State& state) {
  const auto rep = RepFamily::twisted(LieAlgebraSpec(Parity::Even, 2), Scalar::parameter(), {1, 2}, {3, -1});
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_homomorphism(rep, CheckMode::Applied, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_AppliedHomomorphism)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_WeightBoxClosure(benchmark::State& state) {
  const auto rep = RepFamily::swapped(LieAlgebraSpec(Parity::Even, 1), Scalar(Rational(1, 3)), 1, 1);
  const int radius = static_cast<int>(state.range(0));
  const std::vector<Polynomial> seeds{Polynomial::constant(rep.roster(), Scalar(1))};
  for (auto _ : state) benchmark::DoNotOptimize(submodule_closure(rep, seeds, WeightBox{std::nullopt, radius, radius - 2}));
}
BENCHMARK(BM_WeightBoxClosure)->Arg(4)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_DegreeCapClosure(benchmark::State& state) {
  const auto rep = RepFamily::twisted(LieAlgebraSpec(Parity::Even, 2), Scalar(0), {1, 2}, {3, -1});
  const std::vector<Polynomial> seeds{Polynomial::constant(rep.roster(), Scalar(1))};
  for (auto _ : state)
    benchmark::DoNotOptimize(submodule_closure(rep, seeds, DegreeCap{static_cast<int>(state.range(0))}));
}
BENCHMARK(BM_DegreeCapClosure)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Decomposition(benchmark::State& state) {
  const auto rep = RepFamily::swapped(LieAlgebraSpec(Parity::Even, 2), Scalar::parameter(), 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(verify_decomposition(rep, 0, static_cast<int>(state.range(0)), 2));
}
BENCHMARK(BM_Decomposition)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
