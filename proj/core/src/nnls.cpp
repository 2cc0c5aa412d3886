#include "hyperricci/nnls.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>

namespace hyperricci {

namespace {

// Solves Q_PP s = -c_P. Returns false when Q_PP is numerically singular.
bool solve_passive(const Eigen::MatrixXd& Q, const Eigen::VectorXd& c, const std::vector<int>& passive,
                   Eigen::VectorXd& s) {
  const auto k = static_cast<Eigen::Index>(passive.size());
  if (k == 0) {
    s.resize(0);
    return true;
  }
  Eigen::MatrixXd sub(k, k);
  Eigen::VectorXd rhs(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    rhs[i] = -c[passive[static_cast<std::size_t>(i)]];
    for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = Q(passive[static_cast<std::size_t>(i)], passive[static_cast<std::size_t>(j)]);
  }
  Eigen::LDLT<Eigen::MatrixXd> ldlt(sub);
  if (ldlt.info() != Eigen::Success) return false;
  const auto& d = ldlt.vectorD();
  double dmax = d.cwiseAbs().maxCoeff();
  if (!(d.minCoeff() > 1e-13 * std::max(dmax, 1e-300))) return false;
  s = ldlt.solve(rhs);
  return s.allFinite();
}

}  // namespace

NonnegativeQpResult nonnegative_qp(const Eigen::MatrixXd& Q, const Eigen::VectorXd& c,
                                   const std::vector<int>& warm_passive, const NonnegativeQpOptions& options) {
  const auto m = c.size();
  NonnegativeQpResult r;
  r.x = Eigen::VectorXd::Zero(m);
  std::vector<char> in_passive(static_cast<std::size_t>(m), 0);
  std::vector<int> passive;

  if (!warm_passive.empty()) {
    Eigen::VectorXd s;
    if (solve_passive(Q, c, warm_passive, s) && (s.array() > 0.0).all()) {
      passive = warm_passive;
      for (std::size_t i = 0; i < passive.size(); ++i) {
        r.x[passive[i]] = s[static_cast<Eigen::Index>(i)];
        in_passive[static_cast<std::size_t>(passive[i])] = 1;
      }
    }
  }

  const double scale = m > 0 ? std::max(1.0, c.cwiseAbs().maxCoeff()) : 1.0;
  std::vector<char> blocked(static_cast<std::size_t>(m), 0);
  Eigen::VectorXd w = -(Q * r.x + c);

  for (r.iterations = 0; r.iterations < options.max_iterations; ++r.iterations) {
    Eigen::Index j = -1;
    double best = options.tol * scale;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (in_passive[static_cast<std::size_t>(i)] || blocked[static_cast<std::size_t>(i)]) continue;
      if (w[i] > best) {
        best = w[i];
        j = i;
      }
    }
    if (j < 0) {
      r.converged = true;
      break;
    }
    passive.push_back(static_cast<int>(j));
    in_passive[static_cast<std::size_t>(j)] = 1;

    const Eigen::VectorXd x_before = r.x;
    bool singular = false;
    for (int inner = 0; inner < 10 * static_cast<int>(m) + 10; ++inner) {
      Eigen::VectorXd s;
      if (!solve_passive(Q, c, passive, s)) {
        singular = true;
        break;
      }
      if ((s.array() > 0.0).all()) {
        for (std::size_t i = 0; i < passive.size(); ++i) r.x[passive[i]] = s[static_cast<Eigen::Index>(i)];
        break;
      }
      // Step toward s until the first passive coordinate hits zero.
      double alpha = 1.0;
      std::size_t hit = 0;
      for (std::size_t i = 0; i < passive.size(); ++i) {
        double xi = r.x[passive[i]];
        double si = s[static_cast<Eigen::Index>(i)];
        if (si <= 0.0) {
          double a = xi / (xi - si);
          if (a < alpha) {
            alpha = a;
            hit = i;
          }
        }
      }
      double xmax = 0.0;
      for (std::size_t i = 0; i < passive.size(); ++i) {
        int p = passive[i];
        r.x[p] += alpha * (s[static_cast<Eigen::Index>(i)] - r.x[p]);
        xmax = std::max(xmax, r.x[p]);
      }
      std::vector<int> kept;
      for (std::size_t i = 0; i < passive.size(); ++i) {
        int p = passive[i];
        if (i == hit || r.x[p] <= 1e-15 * xmax) {
          r.x[p] = 0.0;
          in_passive[static_cast<std::size_t>(p)] = 0;
        } else {
          kept.push_back(p);
        }
      }
      passive = std::move(kept);
      if (passive.empty()) break;
    }
    if (!singular && !in_passive[static_cast<std::size_t>(j)] && r.x == x_before) {
      singular = true;  // j was dropped without moving x: no descent through it
    }
    if (singular) {
      // Column j is dependent on the passive set; park it until x changes.
      passive.erase(std::remove(passive.begin(), passive.end(), static_cast<int>(j)), passive.end());
      in_passive[static_cast<std::size_t>(j)] = 0;
      blocked[static_cast<std::size_t>(j)] = 1;
      w = -(Q * r.x + c);
      continue;
    }
    std::fill(blocked.begin(), blocked.end(), 0);
    w = -(Q * r.x + c);
  }
  r.passive = passive;
  return r;
}

}  // namespace hyperricci
