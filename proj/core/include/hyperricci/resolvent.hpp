#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "hyperricci/hypergraph.hpp"

namespace hyperricci {

struct ResolventOptions {
  double gap_tol = 1e-12;  // objective duality gap, relative to max(1, objective)
};

struct ResolventResult {
  Vector g;            // J_lambda f
  Vector flow;         // (f - g) / lambda, an element of L g
  double gap = 0.0;    // certified duality gap of the prox objective
  double objective = 0.0;
  double distance_bound = 0.0;  // sqrt(2 lambda gap) >= ||g - g*||_{D^{-1}}
};

// Resolvent J_lambda = (I + lambda L)^{-1}, i.e. the proximal map of the
// energy E in the D^{-1} geometry:
//
//   J_lambda f = argmin_g ||f - g||^2_{D^{-1}} / (2 lambda) + E(g).
//
// Solved exactly as a strictly convex QP in (potential, per-edge spread)
// whose dual is a nonnegative QP over one multiplier per ordered vertex
// pair of each hyperedge. The dual multipliers are the Laplacian flows.
//
// The solver caches the constraint Gram matrices of `h` and warm-starts
// from the previous active set, so a single instance is not thread-safe;
// use one per thread.
class ResolventSolver {
 public:
  explicit ResolventSolver(const Hypergraph& h, ResolventOptions options = {});

  // Throws SolverFailure if lambda <= 0 or the gap is not certified.
  ResolventResult solve(const Vector& f, double lambda);

  const Hypergraph& hypergraph() const noexcept { return *h_; }

 private:
  struct Constraint {
    int edge;
    int p;
    int q;
  };

  const Hypergraph* h_;
  ResolventOptions options_;
  std::vector<Constraint> constraints_;
  Eigen::MatrixXd gram_potential_;  // (delta_p - delta_q) pairings under D^{-1}
  Eigen::MatrixXd gram_spread_;     // same-edge indicator / w_e
  std::vector<int> warm_;
};

// One-shot convenience wrapper around ResolventSolver.
Vector resolve(const Hypergraph& h, const Vector& f, double lambda, const ResolventOptions& options = {});

// psi_f^lambda = (f - J_lambda f) - lambda L^0 f.
struct PsiDiagnostic {
  double lambda = 0.0;
  Vector psi;
  Vector resolvent;
  Vector l0;

  // <psi, delta_x - delta_y>_{D^{-1}}
  double pairing(const Hypergraph& h, int x, int y) const;
};

PsiDiagnostic psi(const Hypergraph& h, const Vector& f, double lambda);
PsiDiagnostic psi(ResolventSolver& solver, const Vector& f, double lambda);

// One row of the liminf probe: the smallest sampled
// <psi_f^lambda, delta_x - delta_y> / lambda over f in the truncated
// Lipschitz set.
struct LiminfRow {
  double lambda = 0.0;
  double infimum = 0.0;
  int argmin_sample = -1;
  int samples = 0;
  int distinct_vertices = 0;  // sampling coverage of the polytope's vertices
};

// Numerical evidence for the lim/inf exchange question. Samples tLip via
// random-objective LP vertices plus convex perturbations (seeded), and
// reports one row per lambda. This is an observation table, not a test
// of the exchange.
std::vector<LiminfRow> probe_liminf(const Hypergraph& h, int x, int y, const std::vector<double>& lambdas,
                                    int sample_count = 200, std::uint64_t seed = 0);

}  // namespace hyperricci
