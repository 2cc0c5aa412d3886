#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "hyperricci/hypergraph.hpp"

namespace hyperricci {

// Lazy random walk m_x^lambda on a graph: 1 - lambda at x, lambda w_xy / d_x
// at each neighbour. Throws NotAGraph unless every hyperedge has two vertices.
Vector random_walk_measure(const Hypergraph& g, int x, double lambda);

// Throws ValidationError unless entries are >= 0 and sum to 1 within 1e-12.
void check_measure(const Vector& mu);

struct TransportResult {
  double primal = 0.0;
  double dual = 0.0;
  Eigen::MatrixXd coupling;  // n x n, rows mu, columns nu
  Vector potential;          // 1-Lipschitz maximizer (zero off the supports)
};

// L1-Wasserstein distance for the hop metric. Solves the transport LP and
// its Kantorovich-Rubinstein dual over the union of the supports, and
// throws LpFailure if they disagree by more than 1e-8.
TransportResult transport(const Hypergraph& g, const Vector& mu, const Vector& nu);
double w1(const Hypergraph& g, const Vector& mu, const Vector& nu);

// Best dual value among 1-Lipschitz f with f(x) - f(y) = d(x, y).
double w1_dual_pinned(const Hypergraph& g, const Vector& mu, const Vector& nu, int x, int y);

struct LlyReport {
  double value = 0.0;
  double lambda = 0.0;                          // where the estimate stabilized
  std::vector<std::pair<double, double>> trace;  // (lambda, estimate)
};

// (1 - W1(m_x, m_y) / d(x, y)) / lambda along lambda = 2^-k until two
// consecutive values agree within 1e-9. Throws NotAGraph, or
// NonStabilized when lambda reaches 2^-30 without agreement.
LlyReport lly_report(const Hypergraph& g, int x, int y);
double lly_curvature(const Hypergraph& g, int x, int y);

}  // namespace hyperricci
