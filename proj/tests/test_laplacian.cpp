#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperricci/families.hpp"
#include "hyperricci/laplacian.hpp"
#include "oracles.hpp"

using namespace hyperricci;

namespace {

Hypergraph r(int n) {
  FamilySpec s;
  s.family = Family::OneRegular;
  s.n = n;
  return generate(s);
}

Hypergraph k(int n) {
  FamilySpec s;
  s.family = Family::CompleteGraph;
  s.n = n;
  return generate(s);
}

Vector random_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = g(rng);
  return v;
}

std::vector<Hypergraph> small_instances() {
  std::vector<Hypergraph> hs{k(2), k(3), r(3), r(5), Hypergraph(3, {{{0, 1, 2}, 1.0}, {{0, 1}, 1.0}})};
  FamilySpec s;
  s.family = Family::Fig2;
  s.A = 2;
  s.B = 1;
  s.w_ev = 0.5;
  s.w_e = 2.0;
  hs.push_back(generate(s));
  s.family = Family::Cycle;
  s.n = 5;
  hs.push_back(generate(s));
  return hs;
}

}  // namespace

TEST_CASE("argmax faces") {
  auto h = r(3);
  auto face = argmax_face(h, delta(h, 0), 0);
  CHECK(face.gap == 1.0);
  CHECK(face.top == std::vector<int>{0});
  CHECK(face.bottom == std::vector<int>{1, 2});
  CHECK(face.bottom_weights == std::vector<double>{0.5, 0.5});

  auto flat = argmax_face(h, 3.0 * degree_vector(h), 0);
  CHECK(flat.gap == 0.0);
  CHECK(flat.top == h.edge(0).vertices);
  CHECK(flat.bottom == h.edge(0).vertices);
  CHECK_FALSE(flat.active());

  // Two-level Lipschitz potential on a hyperedge that sees both levels.
  Hypergraph h2(3, {{{0, 1, 2}, 1.0}, {{0, 1}, 1.0}});
  Vector u(3);
  u << 1.0, 0.0, 1.0;
  Vector f = from_potential(h2, u);
  CHECK(argmax_face(h2, f, 0).gap == doctest::Approx(1.0));
  CHECK(argmax_face(h2, f, 1).gap == doctest::Approx(1.0));

  // a loop never contributes
  Hypergraph loop(2, {{{0, 1}, 1.0}, {{0}, 1.0}});
  CHECK(argmax_face(loop, delta(loop, 0), 1).gap == 0.0);
}

TEST_CASE("energy") {
  auto h2 = k(2);
  CHECK(energy(h2, delta(h2, 0)) == doctest::Approx(0.5));
  CHECK(energy(r(3), delta(r(3), 0)) == doctest::Approx(0.5));
  CHECK(energy(r(4), 2.0 * degree_vector(r(4))) == 0.0);
}

TEST_CASE("canonical restriction on the examples") {
  auto h = r(3);
  auto sel = laplacian_l0(h, delta(h, 0));
  // flow t to y and 1 - t to z; minimize 1 + t^2 + (1 - t)^2 (golden section is
  // only good to about sqrt(eps) on a quadratic)
  double t = oracle::golden_min([](double s) { return 1.0 + s * s + (1.0 - s) * (1.0 - s); }, 0.0, 1.0);
  CHECK(sel.value[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sel.value[1] == doctest::Approx(-t).epsilon(1e-7));
  CHECK(sel.value[2] == doctest::Approx(-(1.0 - t)).epsilon(1e-7));

  auto h2 = k(2);
  auto s2 = laplacian_l0(h2, delta(h2, 0));
  CHECK(s2.value[0] == doctest::Approx(1.0));
  CHECK(s2.value[1] == doctest::Approx(-1.0));

  auto s0 = laplacian_l0(h, 4.0 * degree_vector(h));
  CHECK(s0.value.norm() == 0.0);
}

TEST_CASE("members of L f") {
  auto h = r(3);
  auto members = laplacian_members(h, delta(h, 0), 10, 3);
  // two extreme choices for the bottom set, then random mixtures
  REQUIRE(members.size() == 12);
  auto l0 = laplacian_l0(h, delta(h, 0));
  for (const auto& m : members) {
    CHECK(m.value.sum() == doctest::Approx(0.0).scale(1.0));
    CHECK(m.norm >= l0.norm - 1e-12);
  }
  CHECK(members[0].value[1] == doctest::Approx(-1.0));
}

TEST_CASE("scale equivariance, conservation and zero sum") {
  std::mt19937_64 rng(11);
  for (const auto& h : small_instances()) {
    for (int trial = 0; trial < 10; ++trial) {
      Vector f = random_vector(h.num_vertices(), rng);
      auto base = laplacian_l0(h, f);
      CHECK(base.value.sum() == doctest::Approx(0.0).scale(1.0));
      for (double c : {0.0, 0.5, 3.0, -2.0}) {
        auto scaled = laplacian_l0(h, c * f);
        CHECK((scaled.value - c * base.value).norm() <= 1e-9 * (1.0 + base.value.norm()));
      }
      for (const auto& face : base.flows) {
        if (!face.active()) continue;
        double top = 0.0, bottom = 0.0;
        for (double w : face.top_weights) top += w;
        for (double w : face.bottom_weights) bottom += w;
        CHECK(top == doctest::Approx(1.0));
        CHECK(bottom == doctest::Approx(1.0));
        Vector contribution = h.edge(face.edge).weight * face.gap * face.point(h.num_vertices());
        double up = 0.0, down = 0.0;
        for (int v : face.top) up += contribution[v];
        for (int v : face.bottom) down += contribution[v];
        CHECK(up == doctest::Approx(h.edge(face.edge).weight * face.gap));
        CHECK(down == doctest::Approx(-h.edge(face.edge).weight * face.gap));
      }
    }
  }
}

TEST_CASE("energy is convex") {
  std::mt19937_64 rng(5);
  for (const auto& h : small_instances()) {
    for (int trial = 0; trial < 20; ++trial) {
      Vector f = random_vector(h.num_vertices(), rng);
      Vector g = random_vector(h.num_vertices(), rng);
      CHECK(energy(h, 0.5 * (f + g)) <= 0.5 * energy(h, f) + 0.5 * energy(h, g) + 1e-14);
    }
  }
}

TEST_CASE("canonical restriction matches support enumeration on tied potentials") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> level(0, 2);
  int checked = 0;
  for (const auto& h : small_instances()) {
    for (int trial = 0; trial < 15; ++trial) {
      Vector u(h.num_vertices());
      for (int v = 0; v < h.num_vertices(); ++v) u[v] = level(rng);
      Vector f = from_potential(h, u);
      auto ref = oracle::min_norm_by_supports(h, f, Vector::Zero(h.num_vertices()));
      if (ref.distance < 0) continue;
      auto sel = laplacian_l0(h, f);
      CHECK(sel.norm == doctest::Approx(ref.distance).epsilon(1e-10).scale(1.0));
      CHECK((sel.value - ref.point).norm() <= 1e-7);
      ++checked;
    }
  }
  CHECK(checked > 50);
}
