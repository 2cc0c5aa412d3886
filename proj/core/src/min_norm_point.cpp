#include "hyperricci/min_norm_point.hpp"

#include <algorithm>

#include <Eigen/Dense>

namespace hyperricci {

namespace {

// argmin ||S a||^2 subject to sum(a) = 1, via the bordered KKT system.
Eigen::VectorXd affine_minimizer(const std::vector<Atom>& corral) {
  const auto k = static_cast<Eigen::Index>(corral.size());
  Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(k + 1, k + 1);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i; j < k; ++j) {
      double g = corral[i].point.dot(corral[j].point);
      kkt(i, j) = g;
      kkt(j, i) = g;
    }
    kkt(i, k) = 1.0;
    kkt(k, i) = 1.0;
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
  rhs[k] = 1.0;
  Eigen::VectorXd sol = kkt.completeOrthogonalDecomposition().solve(rhs);
  return sol.head(k);
}

Eigen::VectorXd combine(const std::vector<Atom>& corral, const std::vector<double>& w) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(corral.front().point.size());
  for (std::size_t i = 0; i < corral.size(); ++i) x += w[i] * corral[i].point;
  return x;
}

}  // namespace

MinNormResult min_norm_point(const std::function<Atom(const Eigen::VectorXd&)>& lmo, Atom start,
                             const MinNormOptions& options) {
  constexpr double kPositive = 1e-14;

  MinNormResult r;
  double scale = std::max(1.0, start.point.squaredNorm());
  r.corral.push_back(std::move(start));
  r.weights = {1.0};
  r.point = r.corral.front().point;

  for (r.iterations = 0; r.iterations < options.max_iterations; ++r.iterations) {
    Atom s = lmo(r.point);
    scale = std::max(scale, s.point.squaredNorm());
    r.gap = r.point.squaredNorm() - r.point.dot(s.point);
    if (r.gap <= options.gap_tol * scale) {
      r.converged = true;
      break;
    }
    bool known = std::any_of(r.corral.begin(), r.corral.end(),
                             [&](const Atom& a) { return a.tag == s.tag; });
    if (known) break;  // stalled on rounding; gap reported as-is

    r.corral.push_back(std::move(s));
    r.weights.push_back(0.0);

    // Minor cycles: move toward the affine minimizer until it lies in the
    // relative interior of the corral's hull.
    for (;;) {
      Eigen::VectorXd alpha = affine_minimizer(r.corral);
      if ((alpha.array() > kPositive).all()) {
        for (std::size_t i = 0; i < r.weights.size(); ++i) r.weights[i] = alpha[static_cast<Eigen::Index>(i)];
        break;
      }
      double step = 1.0;
      for (std::size_t i = 0; i < r.weights.size(); ++i) {
        double a = alpha[static_cast<Eigen::Index>(i)];
        if (a <= kPositive && r.weights[i] - a > 0.0) step = std::min(step, r.weights[i] / (r.weights[i] - a));
      }
      for (std::size_t i = 0; i < r.weights.size(); ++i) {
        r.weights[i] = (1.0 - step) * r.weights[i] + step * alpha[static_cast<Eigen::Index>(i)];
      }
      std::vector<Atom> kept;
      std::vector<double> kept_w;
      for (std::size_t i = 0; i < r.weights.size(); ++i) {
        if (r.weights[i] > kPositive) {
          kept.push_back(std::move(r.corral[i]));
          kept_w.push_back(r.weights[i]);
        }
      }
      if (kept.empty()) {  // cannot happen in exact arithmetic
        kept.push_back(std::move(r.corral.back()));
        kept_w = {1.0};
      }
      double total = 0.0;
      for (double w : kept_w) total += w;
      for (double& w : kept_w) w /= total;
      r.corral = std::move(kept);
      r.weights = std::move(kept_w);
      if (r.corral.size() == 1) break;
    }
    r.point = combine(r.corral, r.weights);
  }
  return r;
}

}  // namespace hyperricci
