#include <benchmark/benchmark.h>

#include <random>

#include "middlecurves/approx.hpp"
#include "middlecurves/frechet.hpp"
#include "middlecurves/middle.hpp"
#include "middlecurves/reduction.hpp"

namespace {

using namespace middlecurves;

Curve random_curve(std::mt19937& rng, const std::string& id, std::size_t n,
                   std::size_t dim) {
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  std::vector<Point> vertices;
  vertices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> c(dim);
    for (double& x : c) x = coord(rng);
    vertices.emplace_back(std::move(c));
  }
  return Curve(id, std::move(vertices));
}

void BM_DiscreteFrechet(benchmark::State& state) {
  std::mt19937 rng(7);
  const std::size_t n = state.range(0);
  const Curve p = random_curve(rng, "p", n, 2);
  const Curve q = random_curve(rng, "q", n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(discrete_frechet(p, q).value_sq);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_DiscreteFrechet)->Range(8, 512)->Complexity();

void BM_DiscreteDecision(benchmark::State& state) {
  std::mt19937 rng(7);
  const std::size_t n = state.range(0);
  const Curve p = random_curve(rng, "p", n, 2);
  const Curve q = random_curve(rng, "q", n, 2);
  const double delta = discrete_frechet(p, q).value * 0.9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(discrete_frechet_decision(p, q, delta));
  }
}
BENCHMARK(BM_DiscreteDecision)->Range(8, 512);

void BM_ContinuousDecision(benchmark::State& state) {
  std::mt19937 rng(7);
  const std::size_t n = state.range(0);
  const Curve p = random_curve(rng, "p", n, 2);
  const Curve q = random_curve(rng, "q", n, 2);
  const double delta = discrete_frechet(p, q).value;
  for (auto _ : state) {
    benchmark::DoNotOptimize(continuous_frechet_decision(p, q, delta));
  }
}
BENCHMARK(BM_ContinuousDecision)->Range(8, 512);

void BM_RestrictedSolveWorkedInstance(benchmark::State& state) {
  const ReductionInstance instance = make_reduction_instance({"AB", "BB"}, 3, 1, 2);
  const CurveSet all = instance.all_curves();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        brute_force_solve(all, 1.0, 7, Variant::kRestricted).feasible);
  }
}
BENCHMARK(BM_RestrictedSolveWorkedInstance);

void BM_MiddleApprox(benchmark::State& state) {
  std::mt19937 rng(11);
  std::vector<Curve> curves;
  for (int i = 0; i < 3; ++i) {
    curves.push_back(random_curve(rng, "c" + std::to_string(i), 4, 2));
  }
  const CurveSet ps(std::move(curves));
  for (auto _ : state) {
    benchmark::DoNotOptimize(middle_approx(ps, {2, 0.5}).realized_radius);
  }
}
BENCHMARK(BM_MiddleApprox);

}  // namespace

BENCHMARK_MAIN();
