#include "hyperricci/transport.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperricci/simplex.hpp"

namespace hyperricci {

namespace {

void require_graph(const Hypergraph& g) {
  if (!g.is_graph()) throw NotAGraph();
}

std::vector<int> support(const Vector& mu) {
  std::vector<int> s;
  for (Eigen::Index v = 0; v < mu.size(); ++v)
    if (mu[v] > 0.0) s.push_back(static_cast<int>(v));
  return s;
}

// Dual LP over the vertices in `s`: maximize sum f (mu - nu) with
// f(a) - f(b) <= d(a, b), optionally pinning f(x) - f(y) = d(x, y).
InequalityLpSolution dual_lp(const Hypergraph& g, const Vector& mu, const Vector& nu, const std::vector<int>& s,
                             int pin_x, int pin_y) {
  const auto k = static_cast<Eigen::Index>(s.size());
  std::vector<std::pair<Eigen::Index, Eigen::Index>> rows;
  for (Eigen::Index a = 0; a < k; ++a)
    for (Eigen::Index b = 0; b < k; ++b)
      if (a != b) rows.emplace_back(a, b);
  Eigen::Index extra = pin_x >= 0 ? 2 : 0;
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()) + extra, k);
  Eigen::VectorXd h(G.rows());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto [a, b] = rows[r];
    G(static_cast<Eigen::Index>(r), a) = 1.0;
    G(static_cast<Eigen::Index>(r), b) = -1.0;
    h[static_cast<Eigen::Index>(r)] = g.distance(s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)]);
  }
  if (pin_x >= 0) {
    Eigen::Index ix = std::find(s.begin(), s.end(), pin_x) - s.begin();
    Eigen::Index iy = std::find(s.begin(), s.end(), pin_y) - s.begin();
    auto r = static_cast<Eigen::Index>(rows.size());
    double d = g.distance(pin_x, pin_y);
    G(r, ix) = -1.0;
    G(r, iy) = 1.0;
    h[r] = -d;
    G(r + 1, ix) = 1.0;
    G(r + 1, iy) = -1.0;
    h[r + 1] = d;
  }
  Eigen::VectorXd c(k);
  for (Eigen::Index a = 0; a < k; ++a) c[a] = mu[s[static_cast<std::size_t>(a)]] - nu[s[static_cast<std::size_t>(a)]];
  return maximize(c, G, h);
}

std::vector<int> merged_support(const Vector& mu, const Vector& nu, std::initializer_list<int> extra) {
  std::vector<int> s;
  for (Eigen::Index v = 0; v < mu.size(); ++v) {
    bool want = mu[v] > 0.0 || nu[v] > 0.0;
    for (int e : extra) want = want || e == v;
    if (want) s.push_back(static_cast<int>(v));
  }
  return s;
}

}  // namespace

void check_measure(const Vector& mu) {
  if ((mu.array() < 0.0).any() || !mu.allFinite()) throw ValidationError("measure has negative or non-finite mass");
  if (std::abs(mu.sum() - 1.0) > 1e-12) throw ValidationError("measure does not sum to 1");
}

Vector random_walk_measure(const Hypergraph& g, int x, double lambda) {
  require_graph(g);
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw ValidationError("random walk needs lambda in [0, 1]");
  if (x < 0 || x >= g.num_vertices()) throw ValidationError("vertex out of range");
  Vector m = Vector::Zero(g.num_vertices());
  m[x] = 1.0 - lambda;
  for (int e : g.incident(x)) {
    const auto& edge = g.edge(e);
    int other = edge.vertices[0] == x ? edge.vertices[1] : edge.vertices[0];
    m[other] += lambda * edge.weight / g.degree(x);
  }
  return m;
}

TransportResult transport(const Hypergraph& g, const Vector& mu, const Vector& nu) {
  check_measure(mu);
  check_measure(nu);
  const int n = g.num_vertices();
  if (mu.size() != n || nu.size() != n) throw ValidationError("measure size does not match the vertex count");
  auto sm = support(mu);
  auto sn = support(nu);
  const auto r = static_cast<Eigen::Index>(sm.size());
  const auto c = static_cast<Eigen::Index>(sn.size());

  StandardLp lp;
  lp.A.setZero(r + c, r * c);
  lp.b.resize(r + c);
  lp.c.resize(r * c);
  for (Eigen::Index i = 0; i < r; ++i) {
    lp.b[i] = mu[sm[static_cast<std::size_t>(i)]];
    for (Eigen::Index j = 0; j < c; ++j) {
      lp.A(i, i * c + j) = 1.0;
      lp.A(r + j, i * c + j) = 1.0;
      lp.c[i * c + j] = g.distance(sm[static_cast<std::size_t>(i)], sn[static_cast<std::size_t>(j)]);
    }
  }
  for (Eigen::Index j = 0; j < c; ++j) lp.b[r + j] = nu[sn[static_cast<std::size_t>(j)]];
  auto primal = solve_lp(lp);

  TransportResult out;
  out.primal = primal.objective;
  out.coupling = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j)
      out.coupling(sm[static_cast<std::size_t>(i)], sn[static_cast<std::size_t>(j)]) = primal.x[i * c + j];

  auto s = merged_support(mu, nu, {});
  auto dual = dual_lp(g, mu, nu, s, -1, -1);
  out.dual = dual.objective;
  out.potential = Vector::Zero(n);
  double shift = dual.u.minCoeff();
  for (std::size_t a = 0; a < s.size(); ++a) out.potential[s[a]] = dual.u[static_cast<Eigen::Index>(a)] - shift;

  if (std::abs(out.primal - out.dual) > 1e-8) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "LpFailure: transport primal " << out.primal << " and dual " << out.dual << " disagree";
    throw LpFailure(msg.str());
  }
  return out;
}

double w1(const Hypergraph& g, const Vector& mu, const Vector& nu) { return transport(g, mu, nu).primal; }

double w1_dual_pinned(const Hypergraph& g, const Vector& mu, const Vector& nu, int x, int y) {
  check_measure(mu);
  check_measure(nu);
  auto s = merged_support(mu, nu, {x, y});
  return dual_lp(g, mu, nu, s, x, y).objective;
}

LlyReport lly_report(const Hypergraph& g, int x, int y) {
  require_graph(g);
  if (x == y) throw PreconditionViolation("LLY curvature needs x != y");
  const double d = g.distance(x, y);
  LlyReport rep;
  double previous = NAN;
  for (int k = 1; k <= 30; ++k) {
    double lambda = std::ldexp(1.0, -k);
    double w = w1(g, random_walk_measure(g, x, lambda), random_walk_measure(g, y, lambda));
    double value = (1.0 - w / d) / lambda;
    rep.trace.emplace_back(lambda, value);
    if (k > 1 && std::abs(value - previous) <= 1e-9) {
      rep.value = value;
      rep.lambda = lambda;
      return rep;
    }
    previous = value;
  }
  throw NonStabilized("NonStabilized: LLY estimate did not settle by lambda = 2^-30");
}

double lly_curvature(const Hypergraph& g, int x, int y) { return lly_report(g, x, y).value; }

}  // namespace hyperricci
