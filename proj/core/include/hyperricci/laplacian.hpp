#pragma once

#include <cstdint>
#include <vector>

#include "hyperricci/hypergraph.hpp"

namespace hyperricci {

// Potentials closer than this are treated as tied when forming argmax faces.
inline constexpr double kTieTolerance = 1e-9;

// Argmax face of the base polytope B_e for a function f.
//
// With u = f / d, the face is { sum_p a_p delta_p - sum_q b_q delta_q } with
// p ranging over the top level set and q over the bottom level set of u on
// e, (a_p) and (b_q) convex weights. `gap` is max_e u - min_e u, the value of
// the support function <f, b> on the face.
struct FaceSpec {
  int edge = -1;
  double gap = 0.0;
  std::vector<int> top;
  std::vector<int> bottom;
  std::vector<double> top_weights;
  std::vector<double> bottom_weights;

  // The encoded point b_e; zero when gap == 0.
  Vector point(int n) const;
  bool active() const noexcept { return gap > 0.0; }
};

FaceSpec argmax_face(const Hypergraph& h, const Vector& f, int edge, double tie_tol = kTieTolerance);

// E(f) = 1/2 sum_e w_e (max_e u - min_e u)^2.
double energy(const Hypergraph& h, const Vector& f);

// One element of L f, with the face choices realizing it.
struct LaplacianSelection {
  Vector value;
  std::vector<FaceSpec> flows;  // one per hyperedge
  double norm = 0.0;            // ||value||_{D^{-1}}
  double gap = 0.0;             // optimality certificate of the min-norm solve
};

// sum_e w_e gap_e b_e for the faces' current simplex weights.
Vector compose(const Hypergraph& h, const std::vector<FaceSpec>& flows);

struct LaplacianOptions {
  double tie_tol = kTieTolerance;
  double gap_tol = 1e-12;
  int max_iterations = 1'000'000;
};

// Canonical restriction L^0 f: the minimum D^{-1}-norm element of L f.
// Solved exactly (finite active-set termination) by Wolfe's min-norm-point
// algorithm on each independent block of the face product. Throws
// SolverFailure if the certificate is not reached.
LaplacianSelection laplacian_l0(const Hypergraph& h, const Vector& f, const LaplacianOptions& options = {});

// Members of L f: every vertex-extreme selection (all simplex weights at a
// vertex) up to `extreme_cap`, followed by `samples` random convex choices.
std::vector<LaplacianSelection> laplacian_members(const Hypergraph& h, const Vector& f, int samples,
                                                  std::uint64_t seed = 0, int extreme_cap = 4096,
                                                  double tie_tol = kTieTolerance);

}  // namespace hyperricci
