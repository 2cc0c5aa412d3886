#pragma once

#include <functional>
#include <vector>

#include <Eigen/Core>

namespace hyperricci {

// An extreme point of a polytope together with a caller-defined tag
// identifying which vertex it is.
struct Atom {
  Eigen::VectorXd point;
  std::vector<int> tag;
};

struct MinNormOptions {
  double gap_tol = 1e-12;  // relative to the squared scale of the atoms
  int max_iterations = 1'000'000;
};

struct MinNormResult {
  Eigen::VectorXd point;
  std::vector<Atom> corral;
  std::vector<double> weights;  // convex weights of the corral atoms
  double gap = 0.0;             // <x, x> - min_s <x, s>
  int iterations = 0;
  bool converged = false;
};

// Wolfe's minimum-norm-point algorithm over conv(atoms) in Euclidean
// space. The polytope is accessed only through a linear minimization
// oracle returning argmin_{s} <direction, s> as an Atom.
MinNormResult min_norm_point(const std::function<Atom(const Eigen::VectorXd&)>& lmo,
                             Atom start, const MinNormOptions& options = {});

}  // namespace hyperricci
