#include "hyperricci/kantorovich.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "hyperricci/laplacian.hpp"
#include "hyperricci/lipschitz.hpp"

namespace hyperricci {

CurvatureNonStabilized::CurvatureNonStabilized(CurvatureReport report)
    : NonStabilized("NonStabilized: curvature estimates did not settle along the lambda schedule"),
      report_(std::move(report)) {}

namespace {

constexpr double kGolden = 0.6180339887498949;

class Search {
 public:
  Search(const Hypergraph& h, int x, int y, double lambda, bool pinned, const KdOptions& options)
      : h_(h), x_(x), y_(y), lambda_(lambda), pinned_(pinned), options_(options), solver_(h) {}

  double eval(const Vector& u) {
    auto r = solver_.solve(from_potential(h_, u), lambda_);
    result_.prox_gap = std::max(result_.prox_gap, r.gap);
    ++result_.evaluations;
    return pairing(h_, r.g, x_, y_);
  }

  KdResult run(const std::vector<Vector>& extra) {
    std::vector<Vector> seeds;
    if (auto pts = integer_points(h_, x_, y_, pinned_, options_.enumeration_cap)) {
      seeds = std::move(*pts);
      result_.enumerated = true;
    } else {
      std::mt19937_64 rng(options_.seed);
      std::normal_distribution<double> normal(0.0, 1.0);
      Vector c = Vector::Zero(h_.num_vertices());
      c[x_] = 1.0;
      c[y_] = -1.0;
      seeds.push_back(lp_vertex(h_, x_, y_, pinned_, c));
      for (int s = 0; s < options_.random_vertices; ++s) {
        for (int v = 0; v < h_.num_vertices(); ++v) c[v] = normal(rng);
        seeds.push_back(lp_vertex(h_, x_, y_, pinned_, c));
      }
    }
    for (const auto& u : extra) seeds.push_back(u);

    std::set<std::vector<double>> seen;
    std::vector<std::pair<double, std::size_t>> scored;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      std::vector<double> key(seeds[i].data(), seeds[i].data() + seeds[i].size());
      if (!seen.insert(key).second) continue;
      scored.emplace_back(eval(seeds[i]), i);
    }
    result_.seeds = static_cast<int>(scored.size());
    // Stable order: value descending, then seed index.
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });

    result_.value = -INFINITY;
    const auto refine = std::min<std::size_t>(scored.size(), static_cast<std::size_t>(std::max(1, options_.refine)));
    for (std::size_t k = 0; k < refine; ++k) {
      Vector u = seeds[scored[k].second];
      double value = scored[k].first;
      double stationarity = ascend(u, value);
      if (value > result_.value) {
        result_.value = value;
        result_.potential = u;
        result_.stationarity = stationarity;
      }
    }
    return result_;
  }

 private:
  // Coordinate ascent over the exact feasible interval of each free vertex.
  double ascend(Vector& u, double& value) {
    double last_gain = 0.0;
    for (int sweep = 0; sweep < options_.max_sweeps; ++sweep) {
      last_gain = 0.0;
      for (int v = 0; v < h_.num_vertices(); ++v) {
        if (v == y_ || (pinned_ && v == x_)) continue;
        double gain = line(u, v, value);
        last_gain = std::max(last_gain, gain);
      }
      if (last_gain <= 1e-14) break;
    }
    return last_gain;
  }

  double line(Vector& u, int v, double& value) {
    Interval iv = coordinate_interval(h_, u, v);
    if (!(iv.hi - iv.lo > 1e-12)) return 0.0;
    const double start = u[v];
    double best_t = start;
    double best = value;
    auto at = [&](double t) {
      u[v] = t;
      double val = eval(u);
      if (val > best) {
        best = val;
        best_t = t;
      }
      return val;
    };
    constexpr int grid = 8;
    std::vector<double> ts(grid + 1);
    std::vector<double> vals(grid + 1);
    for (int k = 0; k <= grid; ++k) {
      ts[static_cast<std::size_t>(k)] = iv.lo + (iv.hi - iv.lo) * k / grid;
      vals[static_cast<std::size_t>(k)] = at(ts[static_cast<std::size_t>(k)]);
    }
    auto kbest = static_cast<std::size_t>(std::max_element(vals.begin(), vals.end()) - vals.begin());
    double a = ts[kbest > 0 ? kbest - 1 : 0];
    double b = ts[std::min<std::size_t>(kbest + 1, grid)];
    double c = b - kGolden * (b - a);
    double d = a + kGolden * (b - a);
    double fc = at(c);
    double fd = at(d);
    while (b - a > options_.line_tol) {
      if (fc >= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - kGolden * (b - a);
        fc = at(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + kGolden * (b - a);
        fd = at(d);
      }
    }
    u[v] = best_t;
    double gain = best - value;
    value = best;
    if (best_t == start) return 0.0;
    return gain;
  }

  const Hypergraph& h_;
  int x_;
  int y_;
  double lambda_;
  bool pinned_;
  const KdOptions& options_;
  ResolventSolver solver_;
  KdResult result_;
};

// (x, y) and (y, x) searches are mirror images (J is odd and translation
// equivariant), so always search with x < y and map the potential back.
KdResult oriented(const Hypergraph& h, int x, int y, double lambda, bool pinned, const KdOptions& options,
                  const std::vector<Vector>& extra, bool also_free) {
  if (!(lambda > 0.0)) throw SolverFailure("SolverFailure: Kantorovich difference needs lambda > 0");
  if (x == y) {
    KdResult r;
    r.potential = Vector::Zero(h.num_vertices());
    return r;
  }
  const bool flip = x > y;
  const int a = flip ? y : x;
  const int b = flip ? x : y;
  auto mirror = [](const Vector& u, int anchor) {
    Vector w = -u;
    w.array() += u[anchor];
    return w;
  };
  std::vector<Vector> seeds;
  for (const auto& u : extra) seeds.push_back(flip ? mirror(u, x) : u);

  KdResult r = Search(h, a, b, lambda, pinned, options).run(seeds);
  if (also_free) {
    KdResult free = Search(h, a, b, lambda, false, options).run({r.potential});
    free.prox_gap = std::max(free.prox_gap, r.prox_gap);
    free.evaluations += r.evaluations;
    if (free.value >= r.value) r = free;
  }
  if (flip) r.potential = mirror(r.potential, a);
  return r;
}

}  // namespace

KdResult wkd(const Hypergraph& h, int x, int y, double lambda, const KdOptions& options) {
  return oriented(h, x, y, lambda, true, options, {}, false);
}

KdResult kd(const Hypergraph& h, int x, int y, double lambda, const KdOptions& options) {
  return oriented(h, x, y, lambda, true, options, {}, true);
}

CurvatureReport kappa(const Hypergraph& h, int x, int y, KappaVariant variant, const KappaOptions& options) {
  if (x == y) throw PreconditionViolation("curvature needs x != y");
  CurvatureReport rep;
  rep.x = x;
  rep.y = y;
  rep.distance = h.distance(x, y);
  rep.variant = variant;
  const double d = rep.distance;

  std::vector<Vector> warm;
  for (double lambda : options.schedule) {
    KdResult r = oriented(h, x, y, lambda, true, options.search, warm, variant == KappaVariant::Iktu);
    KappaRow row;
    row.lambda = lambda;
    row.difference = r.value;
    row.kappa = (1.0 - r.value / d) / lambda;
    row.potential = r.potential;
    row.pairing = pairing(h, laplacian_l0(h, from_potential(h, r.potential)).value, x, y);
    row.stationarity = r.stationarity;
    row.prox_gap = r.prox_gap;
    warm = {r.potential};
    rep.rows.push_back(row);

    const auto k = rep.rows.size();
    if (k >= 2 && std::abs(rep.rows[k - 1].kappa - rep.rows[k - 2].kappa) < options.stabilization) {
      if (!rep.stabilized) {
        rep.stabilized = true;
        rep.kappa = row.kappa;
        rep.lambda = lambda;
        rep.pairing_constant = row.pairing;
      }
      if (!options.full_schedule) break;
    }
  }
  if (!rep.stabilized) throw CurvatureNonStabilized(rep);
  return rep;
}

}  // namespace hyperricci
