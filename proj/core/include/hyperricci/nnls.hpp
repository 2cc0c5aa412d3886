#pragma once

#include <vector>

#include <Eigen/Core>

namespace hyperricci {

struct NonnegativeQpOptions {
  double tol = 1e-13;  // on the scaled multiplier of a candidate column
  int max_iterations = 100'000;
};

struct NonnegativeQpResult {
  Eigen::VectorXd x;
  std::vector<int> passive;  // indices with x > 0
  int iterations = 0;
  bool converged = false;
};

// minimize 1/2 x'Qx + c'x subject to x >= 0, Q symmetric positive
// semidefinite. Lawson-Hanson active set run on the Gram matrix; the
// passive set stays linearly independent, so rank-deficient Q is fine.
// `warm_passive` optionally seeds the passive set.
NonnegativeQpResult nonnegative_qp(const Eigen::MatrixXd& Q, const Eigen::VectorXd& c,
                                   const std::vector<int>& warm_passive = {},
                                   const NonnegativeQpOptions& options = {});

}  // namespace hyperricci
