#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperricci/families.hpp"
#include "hyperricci/kantorovich.hpp"
#include "hyperricci/lipschitz.hpp"
#include "hyperricci/transport.hpp"
#include "hyperricci/two_level.hpp"
#include "oracles.hpp"

using namespace hyperricci;

namespace {

Hypergraph make(Family f, int n) {
  FamilySpec s;
  s.family = f;
  s.n = n;
  return generate(s);
}

FamilySpec fig_spec(Family f, int A, int B, double w_ev = 1.0, double w_e = 1.0) {
  FamilySpec s;
  s.family = f;
  s.A = A;
  s.B = B;
  s.w_ev = w_ev;
  s.w_e = w_e;
  return s;
}

Hypergraph h1() { return Hypergraph(3, {{{0, 1, 2}, 1.0}}); }
Hypergraph h2() { return Hypergraph(3, {{{0, 1, 2}, 1.0}, {{0, 1}, 1.0}}); }

}  // namespace

TEST_CASE("Kantorovich difference on K2") {
  auto h = make(Family::CompleteGraph, 2);
  for (double lambda : {1.0, 0.1, 1e-3}) {
    CHECK(kd(h, 0, 1, lambda).value == doctest::Approx(1.0 / (1.0 + 2.0 * lambda)).epsilon(1e-9));
    CHECK(wkd(h, 1, 0, lambda).value == doctest::Approx(1.0 / (1.0 + 2.0 * lambda)).epsilon(1e-9));
  }
  CHECK(kd(h, 0, 0, 0.1).value == 0.0);
  CHECK_THROWS_AS(kd(h, 0, 1, 0.0), SolverFailure);
}

TEST_CASE("KD dominates wKD and wKD is symmetric") {
  std::vector<Hypergraph> hs{make(Family::OneRegular, 4), make(Family::Cycle, 5), h1(), h2(),
                             generate(fig_spec(Family::Fig2, 2, 1, 0.5, 2.0))};
  for (const auto& h : hs) {
    for (int x = 0; x < h.num_vertices(); ++x)
      for (int y = x + 1; y < h.num_vertices(); ++y) {
        auto a = wkd(h, x, y, 1e-2);
        auto b = wkd(h, y, x, 1e-2);
        CHECK(a.value == doctest::Approx(b.value).epsilon(1e-12));
        CHECK(a.value > 0.0);
        CHECK(kd(h, x, y, 1e-2).value >= a.value - 1e-12);
        CHECK(contains(h, {LipschitzFlavor::Pinned, x, y}, a.potential));
      }
  }
}

TEST_CASE("curvature examples") {
  auto r3 = kappa(make(Family::OneRegular, 3), 0, 1, KappaVariant::Iktu);
  CHECK(r3.stabilized);
  CHECK(r3.kappa == doctest::Approx(1.5).epsilon(1e-3));
  CHECK(r3.pairing_constant == doctest::Approx(1.5).epsilon(1e-6));

  auto k2 = kappa(make(Family::CompleteGraph, 2), 0, 1, KappaVariant::Wiktu);
  CHECK(k2.kappa == doctest::Approx(2.0).epsilon(1e-3));

  for (auto g : {make(Family::CompleteGraph, 3), make(Family::Cycle, 4), make(Family::Cycle, 5)}) {
    auto w = kappa(g, 0, 1, KappaVariant::Wiktu);
    CHECK(std::abs(w.kappa - lly_curvature(g, 0, 1)) <= 1e-3);
  }
  CHECK_THROWS_AS(kappa(make(Family::CompleteGraph, 2), 1, 1, KappaVariant::Iktu), PreconditionViolation);

  KappaOptions one;
  one.schedule = {1e-2};
  CHECK_THROWS_AS(kappa(make(Family::OneRegular, 3), 0, 1, KappaVariant::Wiktu, one), CurvatureNonStabilized);
  try {
    kappa(make(Family::OneRegular, 3), 0, 1, KappaVariant::Wiktu, one);
  } catch (const CurvatureNonStabilized& e) {
    CHECK(e.report().rows.size() == 1);
  }
}

TEST_CASE("two-level enumeration") {
  for (int n = 2; n <= 12; ++n) {
    double expect = n / (static_cast<double>((n + 1) / 2) * (n / 2));
    CHECK(c_two_level(make(Family::OneRegular, n), 0, 1).value == doctest::Approx(expect).epsilon(1e-12));
    FamilySpec s;
    s.family = Family::OneRegular;
    s.n = n;
    CHECK(c_closed_form(s) == doctest::Approx(expect).epsilon(1e-12));
  }
  CHECK(c_two_level(h1(), 0, 1).value == doctest::Approx(1.5));
  CHECK(c_two_level(h2(), 0, 1).value == doctest::Approx(5.0 / 3.0));
  CHECK(c_two_level(h2(), 1, 2).value == doctest::Approx(5.0 / 4.0));
  // vol / (max{d_a, d_b} + d_c)
  CHECK(c_two_level(h2(), 1, 2).value == doctest::Approx(5.0 / (2.0 + 2.0)));

  auto r = c_two_level(generate(fig_spec(Family::Fig1, 3, 2)), 0, 1);
  CHECK(r.assignments == 32);
  CHECK(r.cross_checked == 2);
  CHECK(r.cross_check_error <= 1e-9);
  CHECK(r.potential[0] == 1.0);
  CHECK(r.potential[1] == 0.0);

  CHECK_THROWS_AS(c_two_level(make(Family::Cycle, 5), 0, 1), UnsupportedStructure);
  CHECK_THROWS_AS(c_two_level(h1(), 0, 0), PreconditionViolation);
}

TEST_CASE("closed form remarks") {
  // fig1 with B = 0 does not depend on the weights
  for (int A = 1; A <= 4; ++A) {
    double base = c_closed_form(fig_spec(Family::Fig1, A, 0));
    for (double a : {0.5, 2.0})
      for (double b : {0.25, 3.0}) CHECK(c_closed_form(fig_spec(Family::Fig1, A, 0, a, b)) == doctest::Approx(base));
  }
  // w_eV -> 0 is continuous
  for (auto f : {Family::Fig2, Family::Fig3}) {
    double limit = c_closed_form(fig_spec(f, 2, 2, 0.0, 1.0));
    CHECK(c_closed_form(fig_spec(f, 2, 2, 1e-9, 1.0)) == doctest::Approx(limit).epsilon(1e-6));
  }
  // fig3 with w_e = 0 is R_{n,1}
  FamilySpec r;
  r.family = Family::OneRegular;
  r.n = 5;
  CHECK(c_closed_form(fig_spec(Family::Fig3, 1, 2, 1.0, 0.0)) == doctest::Approx(c_closed_form(r)));
  CHECK_THROWS_AS(c_closed_form(fig_spec(Family::Fig1, 0, 0)), InvalidSpec);
  CHECK_THROWS_AS(c_closed_form(fig_spec(Family::Fig2, 1, 1, -1.0, 1.0)), InvalidSpec);
}

TEST_CASE("generic search") {
  for (auto f : {Family::Fig1, Family::Fig2, Family::Fig3}) {
    auto h = generate(fig_spec(f, 2, 1, 0.5, 2.0));
    auto g = c_generic(h, 0, 1, 32, 1);
    CHECK(g.cross_checked);
    CHECK_FALSE(g.upper_bound);
    CHECK(g.value == doctest::Approx(c_two_level(h, 0, 1).value).epsilon(1e-9));
  }
  CHECK(c_generic(h1(), 0, 1).value == doctest::Approx(1.5));
  for (int n = 3; n <= 5; ++n) {
    auto g = c_generic(make(Family::CompleteGraph, n), 0, 1);
    CHECK(std::abs(g.value - n / (n - 1.0)) <= 1e-6);
    CHECK(g.upper_bound);
  }
}

TEST_CASE("key property") {
  auto r5 = make(Family::OneRegular, 5);
  auto best = c_two_level(r5, 0, 1);
  CHECK(verify_key_property(r5, best.potential, 0, 1).all());

  auto h = generate(fig_spec(Family::Fig1, 2, 2, 1.0, 2.0));
  Vector u = c_two_level(h, 0, 1).potential;
  u[2] = 0.5;
  auto rep = verify_key_property(h, u, 0, 1);
  CHECK_FALSE(rep.two_level);
  CHECK_FALSE(rep.detail.empty());
  CHECK(c_objective(h, u, 0, 1) >= c_two_level(h, 0, 1).value - 1e-12);

  CHECK_THROWS_AS(verify_key_property(h, Vector::Zero(h.num_vertices()), 0, 1), PreconditionViolation);
  Vector cu = Vector::Zero(5);
  cu[0] = 1.0;
  CHECK_THROWS_AS(verify_key_property(make(Family::Cycle, 5), cu, 0, 1), UnsupportedStructure);
}

TEST_CASE("ordering chain on small instances") {
  std::vector<Hypergraph> hs{make(Family::OneRegular, 3), make(Family::OneRegular, 4), h1(), h2(),
                             generate(fig_spec(Family::Fig1, 1, 1, 0.5, 2.0)),
                             generate(fig_spec(Family::Fig3, 2, 1, 2.0, 0.5))};
  for (const auto& h : hs) {
    double i = kappa(h, 0, 1, KappaVariant::Iktu).kappa;
    double w = kappa(h, 0, 1, KappaVariant::Wiktu).kappa;
    double c = c_two_level(h, 0, 1).value;
    CHECK(i <= w + 1e-3);
    CHECK(w <= c + 1e-3);
  }
}

TEST_CASE("KD triangle and wKD geodesic triangle") {
  const double lambda = 1e-3;
  std::vector<Hypergraph> hs{make(Family::Cycle, 6), h2(), make(Family::OneRegular, 4),
                             make(Family::CompleteHypergraph, 4)};
  for (const auto& h : hs) {
    const int n = h.num_vertices();
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n, n), W = Eigen::MatrixXd::Zero(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        K(a, b) = K(b, a) = kd(h, a, b, lambda).value;
        W(a, b) = W(b, a) = wkd(h, a, b, lambda).value;
      }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          CHECK(K(a, c) <= K(a, b) + K(b, c) + 1e-8);
          if (h.distance(a, c) == h.distance(a, b) + h.distance(b, c)) CHECK(W(a, c) <= W(a, b) + W(b, c) + 1e-8);
        }
  }
}

TEST_CASE("pairing stabilizes and the wKD potential rounds to a minimizer of C") {
  KappaOptions opts;
  opts.full_schedule = true;
  for (auto f : {Family::Fig1, Family::Fig2, Family::Fig3}) {
    auto h = generate(fig_spec(f, 2, 2, 1.0, 2.0));
    auto rep = kappa(h, 0, 1, KappaVariant::Wiktu, opts);
    REQUIRE(rep.rows.size() == 4);
    CHECK(rep.rows[2].pairing == doctest::Approx(rep.rows[3].pairing).epsilon(1e-6));
    Vector u = rep.rows.back().potential;
    Vector rounded(u.size());
    for (int v = 0; v < u.size(); ++v) rounded[v] = std::abs(u[v] - u[0]) < std::abs(u[v] - u[1]) ? 1.0 : 0.0;
    CHECK(c_objective(h, rounded, 0, 1) == doctest::Approx(c_two_level(h, 0, 1).value).epsilon(1e-6));
  }
}
