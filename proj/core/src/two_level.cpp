#include "hyperricci/two_level.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "hyperricci/laplacian.hpp"
#include "hyperricci/lipschitz.hpp"

namespace hyperricci {

namespace {

struct Shape {
  int cover = -1;  // hyperedge containing every vertex
  int other = -1;  // the second hyperedge, -1 when absent
};

bool find_shape(const Hypergraph& h, Shape& s) {
  const int n = h.num_vertices();
  if (h.num_edges() < 1 || h.num_edges() > 2) return false;
  for (int e = 0; e < h.num_edges(); ++e) {
    if (static_cast<int>(h.edge(e).vertices.size()) == n) {
      s.cover = e;
      break;
    }
  }
  if (s.cover < 0) return false;
  s.other = h.num_edges() == 2 ? 1 - s.cover : -1;
  return true;
}

Shape require_shape(const Hypergraph& h) {
  Shape s;
  if (!find_shape(h, s)) {
    throw UnsupportedStructure(
        "UnsupportedStructure: two-level enumeration needs a hyperedge covering V plus at most one more");
  }
  return s;
}

// Ratio L^0 f(v) / d_v (in absolute value) of vertex v on one side of a
// two-level potential. `side[u]` marks the side; only e_V and e carry flow.
class FlowFormula {
 public:
  FlowFormula(const Hypergraph& h, const Shape& s) : h_(h) {
    w_cover_ = h.edge(s.cover).weight;
    in_e_.assign(static_cast<std::size_t>(h.num_vertices()), 0);
    if (s.other >= 0) {
      w_e_ = h.edge(s.other).weight;
      for (int v : h.edge(s.other).vertices) in_e_[static_cast<std::size_t>(v)] = 1;
    }
  }

  double ratio(const std::vector<char>& side, char which, int v) const {
    double d_side = 0.0;
    double d_rest = 0.0;  // side minus e
    double d_shared = 0.0;
    bool e_here = false;
    bool e_there = false;
    for (int u = 0; u < h_.num_vertices(); ++u) {
      bool mine = side[static_cast<std::size_t>(u)] == which;
      bool in_e = in_e_[static_cast<std::size_t>(u)] != 0;
      if (in_e) (mine ? e_here : e_there) = true;
      if (!mine) continue;
      d_side += h_.degree(u);
      (in_e ? d_shared : d_rest) += h_.degree(u);
    }
    bool crossing = w_e_ > 0.0 && e_here && e_there;
    if (!crossing) return w_cover_ / d_side;
    double uniform = (w_cover_ + w_e_) / d_side;
    if (d_rest == 0.0 || uniform * d_rest <= w_cover_ * (1.0 + 1e-15)) return uniform;
    return in_e_[static_cast<std::size_t>(v)] ? w_e_ / d_shared : w_cover_ / d_rest;
  }

 private:
  const Hypergraph& h_;
  double w_cover_ = 0.0;
  double w_e_ = 0.0;
  std::vector<char> in_e_;
};

}  // namespace

double c_objective(const Hypergraph& h, const Vector& u, int x, int y) {
  return pairing(h, laplacian_l0(h, from_potential(h, u)).value, x, y) / h.distance(x, y);
}

bool two_level_supported(const Hypergraph& h) {
  Shape s;
  return find_shape(h, s) && h.num_vertices() <= 22;
}

TwoLevelResult c_two_level(const Hypergraph& h, int x, int y) {
  if (x == y) throw PreconditionViolation("C(x, y) needs x != y");
  const Shape shape = require_shape(h);
  const int n = h.num_vertices();
  if (n > 22) throw UnsupportedStructure("UnsupportedStructure: two-level enumeration is capped at 22 vertices");

  FlowFormula formula(h, shape);
  std::vector<int> free;
  for (int v = 0; v < n; ++v)
    if (v != x && v != y) free.push_back(v);

  TwoLevelResult r;
  r.assignments = 1LL << free.size();
  r.value = INFINITY;
  std::vector<char> side(static_cast<std::size_t>(n), 0);
  side[static_cast<std::size_t>(x)] = 1;
  Vector u = Vector::Zero(n);
  u[x] = 1.0;
  for (long long mask = 0; mask < r.assignments; ++mask) {
    for (std::size_t k = 0; k < free.size(); ++k) {
      char top = static_cast<char>((mask >> k) & 1);
      side[static_cast<std::size_t>(free[k])] = top;
      u[free[k]] = top;
    }
    double value = formula.ratio(side, 1, x) + formula.ratio(side, 0, y);
    if (mask % 20 == 0) {
      double exact = c_objective(h, u, x, y);
      r.cross_check_error = std::max(r.cross_check_error, std::abs(exact - value));
      ++r.cross_checked;
    }
    if (value < r.value) {
      r.value = value;
      r.potential = u;
    }
  }
  if (r.cross_check_error > 1e-9) {
    std::ostringstream msg;
    msg << "SolverFailure: flow formula and laplacian_l0 disagree by " << r.cross_check_error;
    throw SolverFailure(msg.str());
  }
  return r;
}

double c_closed_form(const FamilySpec& spec) {
  if (spec.family == Family::OneRegular) {
    if (spec.n < 2) throw InvalidSpec("InvalidSpec: R_{n,1} needs n >= 2");
    double hi = (spec.n + 1) / 2;
    double lo = spec.n / 2;
    return spec.n / (hi * lo);
  }
  if (!spec.is_fig()) throw InvalidSpec("InvalidSpec: no closed form for this family");
  const int A = spec.A;
  const int B = spec.B;
  if (A < 0 || B < 0 || A + B < 1 || spec.w_ev < 0.0 || spec.w_e < 0.0 || spec.w_ev + spec.w_e <= 0.0) {
    throw InvalidSpec("InvalidSpec: closed form needs A, B >= 0, A + B >= 1 and nonnegative weights");
  }
  const double W = spec.w_ev + spec.w_e;
  const double w1 = spec.w_ev;
  const int n = A + B + 2;
  const int size_e = fig_edge_size(spec);
  const double vol = W * size_e + w1 * (n - size_e);

  // max over I + J = total (I, J >= 1) and K + L = B of the product.
  auto split_max = [&](int total, double k_shift, double l_shift) {
    double best = -INFINITY;
    for (int I = 1; I <= total - 1; ++I) {
      int J = total - I;
      for (int K = 0; K <= B; ++K) {
        int L = B - K;
        best = std::max(best, (W * I + w1 * (K + k_shift)) * (W * J + w1 * (L + l_shift)));
      }
    }
    return best;
  };

  switch (spec.family) {
    case Family::Fig1:
      return W * vol / split_max(A + 2, 0.0, 0.0);
    case Family::Fig2: {
      double best = -INFINITY;
      for (int K = 0; K <= B; ++K) best = std::max(best, (W * (A + 1) + w1 * K) * (B - K + 1));
      double value = vol / best;
      double second = split_max(A + 1, 0.0, 1.0);
      if (second > -INFINITY) value = std::min(value, W * vol / second);
      return value;
    }
    case Family::Fig3: {
      double best = -INFINITY;
      for (int K = 0; K <= B; ++K) best = std::max(best, (W * A + w1 * (K + 1)) * (B - K + 1));
      double value = vol / best;
      double second = split_max(A, 1.0, 1.0);
      if (second > -INFINITY) value = std::min(value, W * vol / second);
      return value;
    }
    default:
      break;
  }
  throw InvalidSpec("InvalidSpec: no closed form for this family");
}

GenericResult c_generic(const Hypergraph& h, int x, int y, int budget, std::uint64_t seed) {
  if (x == y) throw PreconditionViolation("C(x, y) needs x != y");
  const int n = h.num_vertices();
  const double dxy = h.distance(x, y);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_int_distribution<int> coin(0, 1);
  const LipschitzRegion pinned{LipschitzFlavor::Pinned, x, y};

  GenericResult r;
  r.value = INFINITY;
  auto eval = [&](const Vector& u) {
    ++r.evaluations;
    return c_objective(h, u, x, y);
  };

  auto descend = [&](Vector u) {
    double value = eval(u);
    for (int sweep = 0; sweep < 50; ++sweep) {
      bool improved = false;
      for (int v = 0; v < n; ++v) {
        if (v == x || v == y) continue;
        Interval iv = coordinate_interval(h, u, v);
        std::vector<double> levels(u.data(), u.data() + n);
        std::sort(levels.begin(), levels.end());
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
        std::vector<double> candidates{iv.lo, iv.hi};
        for (std::size_t i = 0; i < levels.size(); ++i) {
          candidates.push_back(levels[i]);
          if (i + 1 < levels.size()) candidates.push_back(0.5 * (levels[i] + levels[i + 1]));
        }
        const double start = u[v];
        double best_t = start;
        for (double t : candidates) {
          if (t < iv.lo - 1e-12 || t > iv.hi + 1e-12 || t == start) continue;
          u[v] = std::clamp(t, iv.lo, iv.hi);
          double val = eval(u);
          if (val < value - 1e-13) {
            value = val;
            best_t = u[v];
            improved = true;
          }
        }
        u[v] = best_t;
      }
      if (!improved) break;
    }
    if (value < r.value) {
      r.value = value;
      r.potential = u;
    }
  };

  for (int s = 0; s < budget; ++s) {
    Vector u(n);
    if (s % 2 == 0) {
      for (int v = 0; v < n; ++v) u[v] = coin(rng) ? dxy : 0.0;
      u[x] = dxy;
      u[y] = 0.0;
      if (!contains(h, pinned, u)) continue;
    } else {
      Vector c(n);
      for (int v = 0; v < n; ++v) c[v] = normal(rng);
      u = lp_vertex(h, x, y, true, c);
    }
    descend(u);
  }
  if (!std::isfinite(r.value)) {
    Vector c = Vector::Zero(n);
    descend(lp_vertex(h, x, y, true, c));
  }

  if (two_level_supported(h)) {
    auto exact = c_two_level(h, x, y);
    r.cross_checked = true;
    r.upper_bound = std::abs(exact.value - r.value) > 1e-9;
  }
  return r;
}

KeyPropertyReport verify_key_property(const Hypergraph& h, const Vector& u, int x, int y) {
  const Shape shape = require_shape(h);
  if (x == y || !contains(h, {LipschitzFlavor::Pinned, x, y}, u)) {
    throw PreconditionViolation("PreconditionViolation: potential is not pinned Lipschitz for the pair");
  }
  const int n = h.num_vertices();
  constexpr double tol = 1e-9;
  KeyPropertyReport rep;
  std::ostringstream detail;

  rep.two_level = true;
  for (int v = 0; v < n; ++v) {
    if (std::abs(u[v] - u[x]) > tol && std::abs(u[v] - u[y]) > tol) {
      rep.two_level = false;
      detail << "vertex " << v << " is off both levels; ";
    }
  }

  Vector l0 = laplacian_l0(h, from_potential(h, u)).value;
  std::map<std::pair<long long, std::vector<int>>, double> seen;
  rep.equal_flows = true;
  for (int v = 0; v < n; ++v) {
    auto key = std::make_pair(std::llround(u[v] / tol), h.incident(v));
    auto [it, fresh] = seen.emplace(key, l0[v]);
    if (!fresh && std::abs(it->second - l0[v]) > 1e-8) {
      rep.equal_flows = false;
      detail << "vertex " << v << " flow differs from its class; ";
    }
  }

  rep.unit_gaps = true;
  for (int e = 0; e < h.num_edges(); ++e) {
    double gap = argmax_face(h, from_potential(h, u), e).gap;
    if (std::abs(gap) > tol && std::abs(gap - 1.0) > tol) {
      rep.unit_gaps = false;
      detail << "hyperedge " << e << " gap " << gap << "; ";
    }
  }
  (void)shape;
  rep.detail = detail.str();
  return rep;
}

}  // namespace hyperricci
