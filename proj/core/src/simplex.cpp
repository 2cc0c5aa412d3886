#include "hyperricci/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/LU>

namespace hyperricci {

namespace {

struct Tableau {
  Eigen::MatrixXd T;  // rows: constraints, last column: rhs
  Eigen::VectorXd obj;  // reduced costs, last entry: -objective
  std::vector<int> basis;
  int pivots = 0;

  Eigen::Index rhs() const { return T.cols() - 1; }

  void pivot(Eigen::Index r, Eigen::Index c) {
    T.row(r) /= T(r, c);
    for (Eigen::Index i = 0; i < T.rows(); ++i) {
      if (i != r && T(i, c) != 0.0) T.row(i) -= T(i, c) * T.row(r);
    }
    if (obj[c] != 0.0) obj -= obj[c] * T.row(r).transpose();
    basis[static_cast<std::size_t>(r)] = static_cast<int>(c);
    ++pivots;
  }

  // Bland's rule over columns [0, ncols). Returns false if unbounded.
  bool run(Eigen::Index ncols, const LpOptions& options) {
    for (;;) {
      if (pivots > options.max_pivots) throw LpFailure("LpFailure: pivot budget exhausted");
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < ncols; ++j) {
        if (obj[j] < -options.tol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      double best = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < T.rows(); ++i) {
        if (T(i, enter) > options.tol) best = std::min(best, T(i, rhs()) / T(i, enter));
      }
      if (best == std::numeric_limits<double>::infinity()) return false;
      Eigen::Index leave = -1;
      for (Eigen::Index i = 0; i < T.rows(); ++i) {
        if (T(i, enter) <= options.tol || T(i, rhs()) / T(i, enter) > best + options.tol) continue;
        if (leave < 0 || basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)]) leave = i;
      }
      pivot(leave, enter);
    }
  }

  void set_objective(const Eigen::VectorXd& cost) {
    obj.setZero(T.cols());
    obj.head(cost.size()) = cost;
    for (Eigen::Index i = 0; i < T.rows(); ++i) {
      double cb = basis[static_cast<std::size_t>(i)] < cost.size() ? cost[basis[static_cast<std::size_t>(i)]] : 0.0;
      if (cb != 0.0) obj -= cb * T.row(i).transpose();
    }
  }
};

}  // namespace

LpSolution solve_lp(const StandardLp& lp, const LpOptions& options) {
  const Eigen::Index m = lp.A.rows();
  const Eigen::Index n = lp.A.cols();
  if (lp.b.size() != m || lp.c.size() != n) throw LpFailure("LpFailure: dimension mismatch");

  Tableau tab;
  tab.T.setZero(m, n + m + 1);
  tab.basis.resize(static_cast<std::size_t>(m));
  std::vector<double> sign(static_cast<std::size_t>(m), 1.0);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (lp.b[i] < 0.0) sign[static_cast<std::size_t>(i)] = -1.0;
    tab.T.block(i, 0, 1, n) = sign[static_cast<std::size_t>(i)] * lp.A.row(i);
    tab.T(i, n + i) = 1.0;
    tab.T(i, n + m) = sign[static_cast<std::size_t>(i)] * lp.b[i];
    tab.basis[static_cast<std::size_t>(i)] = static_cast<int>(n + i);
  }

  // Phase one: minimize the sum of artificials.
  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n + m);
  phase1.tail(m).setOnes();
  tab.set_objective(phase1);
  tab.run(n + m, options);
  double scale = m > 0 ? std::max(1.0, lp.b.cwiseAbs().maxCoeff()) : 1.0;
  if (-tab.obj[tab.rhs()] > 1e-9 * scale) throw LpFailure("LpFailure: infeasible");

  // Drive remaining artificials out; rows where that is impossible are redundant.
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (tab.basis[static_cast<std::size_t>(i)] >= n) {
      Eigen::Index col = -1;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (std::abs(tab.T(i, j)) > 1e-9) {
          col = j;
          break;
        }
      }
      if (col >= 0) tab.pivot(i, col);
    }
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    if (tab.basis[static_cast<std::size_t>(i)] < n) keep.push_back(i);
  }
  {
    Eigen::MatrixXd T(static_cast<Eigen::Index>(keep.size()), n + 1);
    std::vector<int> basis;
    for (std::size_t k = 0; k < keep.size(); ++k) {
      T.block(static_cast<Eigen::Index>(k), 0, 1, n) = tab.T.block(keep[k], 0, 1, n);
      T(static_cast<Eigen::Index>(k), n) = tab.T(keep[k], tab.rhs());
      basis.push_back(tab.basis[static_cast<std::size_t>(keep[k])]);
    }
    tab.T = std::move(T);
    tab.basis = std::move(basis);
  }

  tab.set_objective(lp.c);
  if (!tab.run(n, options)) throw LpFailure("LpFailure: unbounded");

  LpSolution sol;
  sol.pivots = tab.pivots;
  sol.x = Eigen::VectorXd::Zero(n);
  for (std::size_t k = 0; k < tab.basis.size(); ++k) {
    sol.x[tab.basis[k]] = std::max(0.0, tab.T(static_cast<Eigen::Index>(k), n));
  }
  sol.objective = lp.c.dot(sol.x);

  // Duals from the final basis on the surviving rows: B'y = c_B.
  sol.dual = Eigen::VectorXd::Zero(m);
  const auto k = static_cast<Eigen::Index>(keep.size());
  if (k > 0) {
    Eigen::MatrixXd B(k, k);
    Eigen::VectorXd cb(k);
    for (Eigen::Index r = 0; r < k; ++r) {
      for (Eigen::Index c = 0; c < k; ++c) B(r, c) = lp.A(keep[static_cast<std::size_t>(r)], tab.basis[static_cast<std::size_t>(c)]);
      cb[r] = lp.c[tab.basis[static_cast<std::size_t>(r)]];
    }
    Eigen::VectorXd y = B.transpose().fullPivLu().solve(cb);
    for (Eigen::Index r = 0; r < k; ++r) sol.dual[keep[static_cast<std::size_t>(r)]] = y[r];
  }
  return sol;
}

InequalityLpSolution maximize(const Eigen::VectorXd& c, const Eigen::MatrixXd& G, const Eigen::VectorXd& h,
                              const LpOptions& options) {
  // u = p - q, G p - G q + s = h, all nonnegative; minimize -c'u.
  const Eigen::Index n = G.cols();
  const Eigen::Index m = G.rows();
  StandardLp lp;
  lp.A.setZero(m, 2 * n + m);
  lp.A.leftCols(n) = G;
  lp.A.middleCols(n, n) = -G;
  lp.A.rightCols(m).setIdentity();
  lp.b = h;
  lp.c.setZero(2 * n + m);
  lp.c.head(n) = -c;
  lp.c.segment(n, n) = c;
  auto sol = solve_lp(lp, options);
  InequalityLpSolution out;
  out.u = sol.x.head(n) - sol.x.segment(n, n);
  out.objective = c.dot(out.u);
  return out;
}

}  // namespace hyperricci
