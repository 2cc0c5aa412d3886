#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperricci/families.hpp"
#include "hyperricci/laplacian.hpp"
#include "hyperricci/resolvent.hpp"
#include "oracles.hpp"

using namespace hyperricci;

namespace {

Hypergraph make(Family f, int n) {
  FamilySpec s;
  s.family = f;
  s.n = n;
  return generate(s);
}

std::vector<Hypergraph> instances() {
  std::vector<Hypergraph> hs{make(Family::CompleteGraph, 2), make(Family::CompleteGraph, 4),
                             make(Family::Cycle, 5), make(Family::OneRegular, 3),
                             make(Family::OneRegular, 5), make(Family::CompleteHypergraph, 4),
                             Hypergraph(3, {{{0, 1, 2}, 1.0}, {{0, 1}, 1.0}})};
  FamilySpec s;
  s.family = Family::Fig1;
  s.A = 2;
  s.B = 1;
  s.w_ev = 0.5;
  s.w_e = 2.0;
  hs.push_back(generate(s));
  return hs;
}

Vector random_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = g(rng);
  return v;
}

}  // namespace

TEST_CASE("constant potential is a fixed point") {
  for (const auto& h : instances()) {
    Vector f = 2.5 * degree_vector(h);
    for (double lambda : {1.0, 1e-3}) {
      Vector g = resolve(h, f, lambda);
      CHECK((g - f).norm() <= 1e-10);
    }
  }
}

TEST_CASE("K2 scalar form") {
  auto h = make(Family::CompleteGraph, 2);
  std::mt19937_64 rng(3);
  for (double lambda : {2.0, 1.0, 0.5, 0.1, 0.01, 1e-4}) {
    Vector f = random_vector(2, rng);
    Vector g = resolve(h, f, lambda);
    CHECK((g - oracle::k2_resolvent(f, lambda)).norm() <= 1e-10);
  }
}

TEST_CASE("solver certificates") {
  auto h = make(Family::OneRegular, 4);
  ResolventSolver solver(h);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    auto r = solver.solve(random_vector(4, rng), 0.3);
    CHECK(r.gap <= 1e-12 * std::max(1.0, std::abs(r.objective)));
    CHECK(r.distance_bound >= 0.0);
    CHECK(r.flow.sum() == doctest::Approx(0.0).scale(1.0));
  }
  CHECK_THROWS_AS(solver.solve(Vector::Ones(4), 0.0), SolverFailure);
}

TEST_CASE("flow is a member of L g") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (const auto& h : instances()) {
    ResolventSolver solver(h);
    for (int trial = 0; trial < 5; ++trial) {
      Vector f = random_vector(h.num_vertices(), rng);
      auto r = solver.solve(f, 0.7);
      auto ref = oracle::min_norm_by_supports(h, r.g, r.flow);
      if (ref.distance < 0) continue;
      CHECK(ref.distance <= 1e-6);
      ++checked;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("nonexpansive and translation equivariant") {
  std::mt19937_64 rng(23);
  for (const auto& h : instances()) {
    ResolventSolver solver(h);
    for (int trial = 0; trial < 10; ++trial) {
      Vector f = random_vector(h.num_vertices(), rng);
      Vector g = random_vector(h.num_vertices(), rng);
      double lambda = 0.05 + 0.2 * trial;
      Vector jf = solver.solve(f, lambda).g;
      Vector jg = solver.solve(g, lambda).g;
      CHECK(weighted_norm(h, jf - jg) <= weighted_norm(h, f - g) + 1e-9);
      Vector shifted = solver.solve(f + 1.5 * degree_vector(h), lambda).g;
      CHECK((shifted - jf - 1.5 * degree_vector(h)).norm() <= 1e-8);
    }
  }
}

TEST_CASE("difference quotient approaches the canonical restriction") {
  std::mt19937_64 rng(31);
  for (const auto& h : instances()) {
    ResolventSolver solver(h);
    Vector f = random_vector(h.num_vertices(), rng);
    Vector l0 = laplacian_l0(h, f).value;
    double previous = INFINITY;
    for (double lambda : {1e-2, 1e-3, 1e-4, 1e-5}) {
      Vector q = (f - solver.solve(f, lambda).g) / lambda;
      double err = weighted_norm(h, q - l0);
      CHECK(err <= previous + 1e-9);
      previous = err;
    }
    CHECK(previous <= 1e-3);
  }
}

TEST_CASE("psi diagnostic") {
  auto h = make(Family::CompleteGraph, 2);
  auto d = psi(h, delta(h, 0), 0.5);
  // J f = (3/4, 1/4), L^0 f = (1, -1)
  CHECK(d.resolvent[0] == doctest::Approx(0.75));
  CHECK(d.psi[0] == doctest::Approx(-0.25));
  CHECK(d.psi[1] == doctest::Approx(0.25));
  CHECK(d.pairing(h, 0, 1) == doctest::Approx(-0.5));
}

TEST_CASE("liminf probe rows") {
  auto h = make(Family::OneRegular, 3);
  auto rows = probe_liminf(h, 0, 1, {1e-1, 1e-2, 1e-3}, 40, 5);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    CHECK(row.samples == 40);
    CHECK(row.distinct_vertices >= 1);
    CHECK(row.argmin_sample >= 0);
    CHECK(std::isfinite(row.infimum));
  }
  auto again = probe_liminf(h, 0, 1, {1e-1, 1e-2, 1e-3}, 40, 5);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(again[i].infimum == rows[i].infimum);
  CHECK_THROWS_AS(probe_liminf(h, 1, 1, {0.1}), PreconditionViolation);
}
