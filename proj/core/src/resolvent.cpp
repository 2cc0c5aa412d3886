#include "hyperricci/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "hyperricci/laplacian.hpp"
#include "hyperricci/lipschitz.hpp"
#include "hyperricci/nnls.hpp"

namespace hyperricci {

ResolventSolver::ResolventSolver(const Hypergraph& h, ResolventOptions options) : h_(&h), options_(options) {
  for (int e = 0; e < h.num_edges(); ++e) {
    const auto& vs = h.edge(e).vertices;
    for (int p : vs)
      for (int q : vs)
        if (p != q) constraints_.push_back({e, p, q});
  }
  const auto m = static_cast<Eigen::Index>(constraints_.size());
  gram_potential_.setZero(m, m);
  gram_spread_.setZero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& a = constraints_[static_cast<std::size_t>(i)];
    for (Eigen::Index j = i; j < m; ++j) {
      const auto& b = constraints_[static_cast<std::size_t>(j)];
      double g = 0.0;
      if (a.p == b.p) g += 1.0 / h.degree(a.p);
      if (a.p == b.q) g -= 1.0 / h.degree(a.p);
      if (a.q == b.p) g -= 1.0 / h.degree(a.q);
      if (a.q == b.q) g += 1.0 / h.degree(a.q);
      gram_potential_(i, j) = gram_potential_(j, i) = g;
      if (a.edge == b.edge) gram_spread_(i, j) = gram_spread_(j, i) = 1.0 / h.edge(a.edge).weight;
    }
  }
}

ResolventResult ResolventSolver::solve(const Vector& f, double lambda) {
  if (!(lambda > 0.0)) throw SolverFailure("SolverFailure: resolvent needs lambda > 0");
  const Hypergraph& h = *h_;
  const int n = h.num_vertices();
  const Vector a = to_potential(h, f);

  ResolventResult r;
  if (constraints_.empty()) {
    r.g = f;
    r.flow = Vector::Zero(n);
    return r;
  }

  // Constraint rows: (u_p - a_p) - (u_q - a_q) - t_e <= a_q - a_p.
  const auto m = static_cast<Eigen::Index>(constraints_.size());
  Eigen::VectorXd b(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& c = constraints_[static_cast<std::size_t>(i)];
    b[i] = a[c.q] - a[c.p];
  }
  Eigen::MatrixXd Q = lambda * gram_potential_ + gram_spread_;
  auto qp = nonnegative_qp(Q, b, warm_);
  warm_ = qp.passive;

  r.flow = Vector::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i) {
    double pi = qp.x[i];
    if (pi == 0.0) continue;
    const auto& c = constraints_[static_cast<std::size_t>(i)];
    r.flow[c.p] += pi;
    r.flow[c.q] -= pi;
  }
  r.g = f - lambda * r.flow;

  // Primal objective at the recovered point (with exact spreads) minus the
  // dual value gives the certified gap.
  double primal = 0.0;
  for (int v = 0; v < n; ++v) {
    double dv = lambda * r.flow[v] / h.degree(v);
    primal += h.degree(v) * dv * dv / (2.0 * lambda);
  }
  primal += energy(h, r.g);
  double dual = -0.5 * qp.x.dot(Q * qp.x) - b.dot(qp.x);
  r.objective = primal;
  r.gap = std::max(0.0, primal - dual);
  r.distance_bound = std::sqrt(2.0 * lambda * r.gap);
  if (!qp.converged || r.gap > options_.gap_tol * std::max(1.0, std::abs(primal))) {
    warm_.clear();
    throw SolverFailure("SolverFailure: resolvent gap " + std::to_string(r.gap) + " above tolerance");
  }
  return r;
}

Vector resolve(const Hypergraph& h, const Vector& f, double lambda, const ResolventOptions& options) {
  ResolventSolver solver(h, options);
  return solver.solve(f, lambda).g;
}

double PsiDiagnostic::pairing(const Hypergraph& h, int x, int y) const { return hyperricci::pairing(h, psi, x, y); }

PsiDiagnostic psi(ResolventSolver& solver, const Vector& f, double lambda) {
  const Hypergraph& h = solver.hypergraph();
  PsiDiagnostic d;
  d.lambda = lambda;
  d.resolvent = solver.solve(f, lambda).g;
  d.l0 = laplacian_l0(h, f).value;
  d.psi = (f - d.resolvent) - lambda * d.l0;
  return d;
}

PsiDiagnostic psi(const Hypergraph& h, const Vector& f, double lambda) {
  ResolventSolver solver(h);
  return psi(solver, f, lambda);
}

std::vector<LiminfRow> probe_liminf(const Hypergraph& h, int x, int y, const std::vector<double>& lambdas,
                                    int sample_count, std::uint64_t seed) {
  if (x == y) throw PreconditionViolation("probe_liminf needs x != y");
  LipschitzRegion region{LipschitzFlavor::Truncated, x, y};
  auto samples = sample_region(h, region, sample_count, seed);

  std::set<std::vector<long long>> distinct;
  for (const auto& s : samples) {
    if (!s.is_vertex) continue;
    std::vector<long long> key;
    for (int v = 0; v < h.num_vertices(); ++v) key.push_back(std::llround(s.potential[v] * 1e9));
    distinct.insert(key);
  }

  ResolventSolver solver(h);
  std::vector<Vector> l0;
  l0.reserve(samples.size());
  for (const auto& s : samples) l0.push_back(laplacian_l0(h, from_potential(h, s.potential)).value);

  std::vector<LiminfRow> rows;
  for (double lambda : lambdas) {
    LiminfRow row;
    row.lambda = lambda;
    row.samples = static_cast<int>(samples.size());
    row.distinct_vertices = static_cast<int>(distinct.size());
    row.infimum = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples.size(); ++i) {
      Vector f = from_potential(h, samples[i].potential);
      Vector g = solver.solve(f, lambda).g;
      Vector p = (f - g) - lambda * l0[i];
      double value = pairing(h, p, x, y) / lambda;
      if (value < row.infimum) {
        row.infimum = value;
        row.argmin_sample = static_cast<int>(i);
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hyperricci
