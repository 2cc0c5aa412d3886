#include <random>

#include <benchmark/benchmark.h>

#include "hyperricci/families.hpp"
#include "hyperricci/kantorovich.hpp"
#include "hyperricci/laplacian.hpp"
#include "hyperricci/resolvent.hpp"
#include "hyperricci/transport.hpp"
#include "hyperricci/two_level.hpp"

namespace hr = hyperricci;

namespace {

hr::Hypergraph fig1(int a, int b) {
  hr::FamilySpec s;
  s.family = hr::Family::Fig1;
  s.A = a;
  s.B = b;
  s.w_ev = 0.5;
  s.w_e = 2.0;
  return hr::generate(s);
}

hr::Hypergraph complete_hypergraph(int n) {
  hr::FamilySpec s;
  s.family = hr::Family::CompleteHypergraph;
  s.n = n;
  return hr::generate(s);
}

hr::Vector random_vector(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  hr::Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = g(rng);
  return v;
}

void BM_LaplacianL0(benchmark::State& state) {
  auto h = complete_hypergraph(static_cast<int>(state.range(0)));
  // integer levels give large tied faces, the expensive case
  hr::Vector u = random_vector(h.num_vertices(), 1).array().round();
  hr::Vector f = hr::from_potential(h, u);
  for (auto _ : state) benchmark::DoNotOptimize(hr::laplacian_l0(h, f).norm);
}
BENCHMARK(BM_LaplacianL0)->DenseRange(4, 7);

void BM_Resolve(benchmark::State& state) {
  auto h = complete_hypergraph(static_cast<int>(state.range(0)));
  hr::ResolventSolver solver(h);
  hr::Vector f = random_vector(h.num_vertices(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(solver.solve(f, 1e-3).gap);
}
BENCHMARK(BM_Resolve)->DenseRange(4, 6);

void BM_W1Cycle(benchmark::State& state) {
  hr::FamilySpec s;
  s.family = hr::Family::Cycle;
  s.n = static_cast<int>(state.range(0));
  auto g = hr::generate(s);
  hr::Vector mu = random_vector(s.n, 3).cwiseAbs(), nu = random_vector(s.n, 4).cwiseAbs();
  mu /= mu.sum();
  nu /= nu.sum();
  for (auto _ : state) benchmark::DoNotOptimize(hr::w1(g, mu, nu));
}
BENCHMARK(BM_W1Cycle)->RangeMultiplier(2)->Range(4, 16);

void BM_TwoLevel(benchmark::State& state) {
  auto h = fig1(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hr::c_two_level(h, 0, 1).value);
}
BENCHMARK(BM_TwoLevel)->DenseRange(2, 6, 2);

void BM_KappaWiktu(benchmark::State& state) {
  auto h = fig1(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(hr::kappa(h, 0, 1, hr::KappaVariant::Wiktu).kappa);
}
BENCHMARK(BM_KappaWiktu)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
