#pragma once

#include <Eigen/Core>

#include "hyperricci/errors.hpp"

namespace hyperricci {

// minimize c'x subject to A x = b, x >= 0.
struct StandardLp {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
};

struct LpSolution {
  Eigen::VectorXd x;
  Eigen::VectorXd dual;  // y with A'y <= c at optimality, b'y = c'x
  double objective = 0.0;
  int pivots = 0;
};

struct LpOptions {
  double tol = 1e-11;
  int max_pivots = 200'000;
};

// Dense two-phase tableau simplex with Bland's rule (no cycling, pivots are
// a deterministic function of the input). Redundant equality rows are
// detected in phase one and dropped. Throws LpFailure when infeasible,
// unbounded or out of pivots.
LpSolution solve_lp(const StandardLp& lp, const LpOptions& options = {});

// maximize c'u subject to G u <= h with u free. The returned point is a
// basic solution, i.e. a vertex when the polyhedron is pointed.
struct InequalityLpSolution {
  Eigen::VectorXd u;
  double objective = 0.0;
};
InequalityLpSolution maximize(const Eigen::VectorXd& c, const Eigen::MatrixXd& G, const Eigen::VectorXd& h,
                              const LpOptions& options = {});

}  // namespace hyperricci
