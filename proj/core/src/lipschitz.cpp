#include "hyperricci/lipschitz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "hyperricci/simplex.hpp"

namespace hyperricci {

std::vector<std::pair<int, int>> adjacent_pairs(const Hypergraph& h) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < h.num_vertices(); ++a)
    for (int b = a + 1; b < h.num_vertices(); ++b)
      if (h.distance(a, b) == 1) out.emplace_back(a, b);
  return out;
}

bool contains(const Hypergraph& h, const LipschitzRegion& region, const Vector& u, double tol) {
  const int n = h.num_vertices();
  if (u.size() != n) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (u[a] - u[b] > h.distance(a, b) + tol) return false;
  auto f = region.flavor;
  if (f == LipschitzFlavor::Truncated || f == LipschitzFlavor::TruncatedPinned) {
    if (u.maxCoeff() > h.diameter() + tol) return false;
  }
  if (f == LipschitzFlavor::Pinned || f == LipschitzFlavor::TruncatedPinned || f == LipschitzFlavor::TwoLevel) {
    if (std::abs(u[region.x] - u[region.y] - h.distance(region.x, region.y)) > tol) return false;
  }
  if (f == LipschitzFlavor::TwoLevel) {
    for (int v = 0; v < n; ++v)
      if (std::abs(u[v] - u[region.x]) > tol && std::abs(u[v] - u[region.y]) > tol) return false;
  }
  return true;
}

Interval coordinate_interval(const Hypergraph& h, const Vector& u, int v) {
  Interval iv{-INFINITY, INFINITY};
  for (int b = 0; b < h.num_vertices(); ++b) {
    if (b == v) continue;
    iv.lo = std::max(iv.lo, u[b] - h.distance(b, v));
    iv.hi = std::min(iv.hi, u[b] + h.distance(v, b));
  }
  return iv;
}

std::optional<std::vector<Vector>> integer_points(const Hypergraph& h, int x, int y, bool pinned, std::size_t cap) {
  const int n = h.num_vertices();
  std::vector<int> order{y};
  if (pinned && x != y) order.push_back(x);
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (v != y && !(pinned && v == x)) rest.push_back(v);
  std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) { return h.distance(a, y) < h.distance(b, y); });
  order.insert(order.end(), rest.begin(), rest.end());

  std::vector<Vector> out;
  Vector u = Vector::Zero(n);
  bool overflow = false;
  // Any metric-consistent partial assignment extends (floor of the McShane
  // extension), so the search never dead-ends.
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (overflow) return;
    if (depth == order.size()) {
      if (out.size() >= cap) {
        overflow = true;
        return;
      }
      out.push_back(u);
      return;
    }
    int v = order[depth];
    int lo = -h.distance(v, y);
    int hi = h.distance(v, y);
    for (std::size_t k = 0; k < depth; ++k) {
      int b = order[k];
      lo = std::max(lo, static_cast<int>(std::lround(u[b])) - h.distance(b, v));
      hi = std::min(hi, static_cast<int>(std::lround(u[b])) + h.distance(b, v));
    }
    if (depth == 0) lo = hi = 0;
    if (pinned && v == x && depth > 0) lo = hi = h.distance(x, y);
    for (int value = lo; value <= hi; ++value) {
      u[v] = value;
      self(self, depth + 1);
    }
    u[v] = 0.0;
  };
  recurse(recurse, 0);
  if (overflow) return std::nullopt;
  return out;
}

namespace {

// Rows of G u <= h for the Lipschitz constraints on adjacent pairs.
void lipschitz_rows(const Hypergraph& h, std::vector<Eigen::VectorXd>& rows, std::vector<double>& rhs) {
  const int n = h.num_vertices();
  for (auto [a, b] : adjacent_pairs(h)) {
    Eigen::VectorXd r = Eigen::VectorXd::Zero(n);
    r[a] = 1.0;
    r[b] = -1.0;
    rows.push_back(r);
    rhs.push_back(1.0);
    rows.push_back(-r);
    rhs.push_back(1.0);
  }
}

void fix_value(int n, int v, double value, std::vector<Eigen::VectorXd>& rows, std::vector<double>& rhs) {
  Eigen::VectorXd r = Eigen::VectorXd::Zero(n);
  r[v] = 1.0;
  rows.push_back(r);
  rhs.push_back(value);
  rows.push_back(-r);
  rhs.push_back(-value);
}

Vector solve_rows(const std::vector<Eigen::VectorXd>& rows, const std::vector<double>& rhs, const Vector& objective) {
  const auto m = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd G(m, objective.size());
  Eigen::VectorXd h(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    G.row(i) = rows[static_cast<std::size_t>(i)].transpose();
    h[i] = rhs[static_cast<std::size_t>(i)];
  }
  Vector u = maximize(objective, G, h).u;
  // Vertices are integral (totally unimodular rows); strip pivoting noise.
  for (Eigen::Index v = 0; v < u.size(); ++v) {
    double r = std::round(u[v]);
    if (std::abs(u[v] - r) < 1e-9) u[v] = r;
  }
  return u;
}

}  // namespace

Vector lp_vertex(const Hypergraph& h, int x, int y, bool pinned, const Vector& objective) {
  const int n = h.num_vertices();
  std::vector<Eigen::VectorXd> rows;
  std::vector<double> rhs;
  lipschitz_rows(h, rows, rhs);
  fix_value(n, y, 0.0, rows, rhs);
  if (pinned) fix_value(n, x, h.distance(x, y), rows, rhs);
  return solve_rows(rows, rhs, objective);
}

std::vector<RegionSample> sample_region(const Hypergraph& h, const LipschitzRegion& region, int count,
                                        std::uint64_t seed) {
  const int n = h.num_vertices();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<RegionSample> out;
  if (count <= 0) return out;

  const auto f = region.flavor;
  const bool pinned = f == LipschitzFlavor::Pinned || f == LipschitzFlavor::TruncatedPinned;

  if (f == LipschitzFlavor::TwoLevel) {
    const double d = h.distance(region.x, region.y);
    for (int s = 0; s < count * 20 && static_cast<int>(out.size()) < count; ++s) {
      Vector u(n);
      for (int v = 0; v < n; ++v) u[v] = unit(rng) < 0.5 ? 0.0 : d;
      u[region.x] = d;
      u[region.y] = 0.0;
      if (contains(h, region, u)) out.push_back({u, true});
    }
    return out;
  }

  std::vector<Eigen::VectorXd> rows;
  std::vector<double> rhs;
  lipschitz_rows(h, rows, rhs);
  for (int v = 0; v < n; ++v) {
    Eigen::VectorXd r = Eigen::VectorXd::Zero(n);
    r[v] = -1.0;
    rows.push_back(r);
    rhs.push_back(0.0);
    rows.push_back(-r);
    rhs.push_back(h.diameter());
  }
  if (pinned) {
    Eigen::VectorXd r = Eigen::VectorXd::Zero(n);
    r[region.x] = 1.0;
    r[region.y] = -1.0;
    rows.push_back(r);
    rhs.push_back(h.distance(region.x, region.y));
    rows.push_back(-r);
    rhs.push_back(-h.distance(region.x, region.y));
  }

  std::vector<Vector> vertices;
  int vertex_count = (count + 1) / 2;
  for (int s = 0; s < vertex_count; ++s) {
    Vector c(n);
    for (int v = 0; v < n; ++v) c[v] = normal(rng);
    Vector u = solve_rows(rows, rhs, c);
    u.array() -= u.minCoeff();
    vertices.push_back(u);
    out.push_back({u, true});
  }
  std::uniform_int_distribution<std::size_t> pick(0, vertices.size() - 1);
  while (static_cast<int>(out.size()) < count) {
    const Vector& a = vertices[pick(rng)];
    const Vector& b = vertices[pick(rng)];
    double t = unit(rng);
    Vector u = (1.0 - t) * a + t * b;
    u.array() -= u.minCoeff();
    out.push_back({u, false});
  }
  return out;
}

}  // namespace hyperricci
