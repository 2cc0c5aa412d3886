#include "hyperricci/laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "hyperricci/min_norm_point.hpp"

namespace hyperricci {

Vector FaceSpec::point(int n) const {
  Vector b = Vector::Zero(n);
  if (!active()) return b;
  for (std::size_t i = 0; i < top.size(); ++i) b[top[i]] += top_weights[i];
  for (std::size_t i = 0; i < bottom.size(); ++i) b[bottom[i]] -= bottom_weights[i];
  return b;
}

FaceSpec argmax_face(const Hypergraph& h, const Vector& f, int edge, double tie_tol) {
  const auto& e = h.edge(edge);
  FaceSpec face;
  face.edge = edge;
  double hi = -INFINITY;
  double lo = INFINITY;
  for (int v : e.vertices) {
    double u = f[v] / h.degree(v);
    hi = std::max(hi, u);
    lo = std::min(lo, u);
  }
  for (int v : e.vertices) {
    double u = f[v] / h.degree(v);
    if (hi - u <= tie_tol) face.top.push_back(v);
    if (u - lo <= tie_tol) face.bottom.push_back(v);
  }
  face.gap = hi - lo;
  if (face.gap <= tie_tol) {
    // Loops and constant potentials: the whole hyperedge, zero contribution.
    face.gap = 0.0;
    face.top = e.vertices;
    face.bottom = e.vertices;
  }
  face.top_weights.assign(face.top.size(), 1.0 / static_cast<double>(face.top.size()));
  face.bottom_weights.assign(face.bottom.size(), 1.0 / static_cast<double>(face.bottom.size()));
  return face;
}

double energy(const Hypergraph& h, const Vector& f) {
  double total = 0.0;
  for (const auto& e : h.edges()) {
    double hi = -INFINITY;
    double lo = INFINITY;
    for (int v : e.vertices) {
      double u = f[v] / h.degree(v);
      hi = std::max(hi, u);
      lo = std::min(lo, u);
    }
    total += 0.5 * e.weight * (hi - lo) * (hi - lo);
  }
  return total;
}

Vector compose(const Hypergraph& h, const std::vector<FaceSpec>& flows) {
  Vector value = Vector::Zero(h.num_vertices());
  for (const auto& face : flows) {
    if (!face.active()) continue;
    value += h.edge(face.edge).weight * face.gap * face.point(h.num_vertices());
  }
  return value;
}

namespace {

// A simplex factor of the face product: mass `scale` (signed) spread over
// `support` with convex weights.
struct Block {
  int face;
  bool top;
  double scale;
  std::vector<int> support;
};

int find(std::vector<int>& parent, int i) {
  while (parent[static_cast<std::size_t>(i)] != i) {
    parent[static_cast<std::size_t>(i)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
    i = parent[static_cast<std::size_t>(i)];
  }
  return i;
}

}  // namespace

LaplacianSelection laplacian_l0(const Hypergraph& h, const Vector& f, const LaplacianOptions& options) {
  const int n = h.num_vertices();
  LaplacianSelection sel;
  sel.flows.reserve(static_cast<std::size_t>(h.num_edges()));
  for (int e = 0; e < h.num_edges(); ++e) sel.flows.push_back(argmax_face(h, f, e, options.tie_tol));

  std::vector<Block> blocks;
  for (std::size_t i = 0; i < sel.flows.size(); ++i) {
    const auto& face = sel.flows[i];
    if (!face.active()) continue;
    double c = h.edge(face.edge).weight * face.gap;
    blocks.push_back({static_cast<int>(i), true, c, face.top});
    blocks.push_back({static_cast<int>(i), false, -c, face.bottom});
  }

  // Blocks sharing a vertex interact through the norm; others separate.
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& b : blocks) {
    for (int v : b.support) parent[static_cast<std::size_t>(find(parent, v))] = find(parent, b.support.front());
  }
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    groups[static_cast<std::size_t>(find(parent, blocks[i].support.front()))].push_back(static_cast<int>(i));
  }

  Vector inv_sqrt_deg(n);
  for (int v = 0; v < n; ++v) inv_sqrt_deg[v] = 1.0 / std::sqrt(h.degree(v));

  sel.gap = 0.0;
  for (const auto& group : groups) {
    if (group.empty()) continue;
    bool fixed = std::all_of(group.begin(), group.end(),
                             [&](int b) { return blocks[static_cast<std::size_t>(b)].support.size() == 1; });
    if (fixed) {
      for (int b : group) {
        auto& blk = blocks[static_cast<std::size_t>(b)];
        auto& face = sel.flows[static_cast<std::size_t>(blk.face)];
        (blk.top ? face.top_weights : face.bottom_weights).assign(1, 1.0);
      }
      continue;
    }

    auto atom_for = [&](const std::vector<int>& choice) {
      Atom a{Vector::Zero(n), choice};
      for (std::size_t k = 0; k < group.size(); ++k) {
        const auto& blk = blocks[static_cast<std::size_t>(group[k])];
        int v = blk.support[static_cast<std::size_t>(choice[k])];
        a.point[v] += blk.scale * inv_sqrt_deg[v];
      }
      return a;
    };
    auto lmo = [&](const Vector& x) {
      std::vector<int> choice(group.size());
      for (std::size_t k = 0; k < group.size(); ++k) {
        const auto& blk = blocks[static_cast<std::size_t>(group[k])];
        // minimize scale * x_v / sqrt(d_v) over the block's support
        std::size_t best = 0;
        double best_val = INFINITY;
        for (std::size_t i = 0; i < blk.support.size(); ++i) {
          int v = blk.support[i];
          double val = blk.scale * x[v] * inv_sqrt_deg[v];
          if (val < best_val - 1e-15) {
            best_val = val;
            best = i;
          }
        }
        choice[k] = static_cast<int>(best);
      }
      return atom_for(choice);
    };

    MinNormOptions mno;
    mno.gap_tol = options.gap_tol;
    mno.max_iterations = options.max_iterations;
    auto result = min_norm_point(lmo, atom_for(std::vector<int>(group.size(), 0)), mno);
    double scale = 0.0;
    for (const auto& a : result.corral) scale = std::max(scale, a.point.squaredNorm());
    if (!result.converged && result.gap > 1e3 * options.gap_tol * std::max(1.0, scale)) {
      throw SolverFailure("SolverFailure: min-norm point did not certify (gap " +
                          std::to_string(result.gap) + ")");
    }
    sel.gap = std::max(sel.gap, result.gap);

    for (std::size_t k = 0; k < group.size(); ++k) {
      const auto& blk = blocks[static_cast<std::size_t>(group[k])];
      auto& face = sel.flows[static_cast<std::size_t>(blk.face)];
      auto& weights = blk.top ? face.top_weights : face.bottom_weights;
      std::fill(weights.begin(), weights.end(), 0.0);
      for (std::size_t a = 0; a < result.corral.size(); ++a) {
        weights[static_cast<std::size_t>(result.corral[a].tag[k])] += result.weights[a];
      }
    }
  }

  sel.value = compose(h, sel.flows);
  sel.norm = weighted_norm(h, sel.value);
  return sel;
}

std::vector<LaplacianSelection> laplacian_members(const Hypergraph& h, const Vector& f, int samples,
                                                  std::uint64_t seed, int extreme_cap, double tie_tol) {
  std::vector<FaceSpec> faces;
  for (int e = 0; e < h.num_edges(); ++e) faces.push_back(argmax_face(h, f, e, tie_tol));

  std::vector<LaplacianSelection> out;
  auto emit = [&](const std::vector<FaceSpec>& flows) {
    LaplacianSelection s;
    s.flows = flows;
    s.value = compose(h, flows);
    s.norm = weighted_norm(h, s.value);
    out.push_back(std::move(s));
  };

  // Odometer over (top index, bottom index) of each active face.
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].active()) active.push_back(i);
  std::vector<int> digit(active.size() * 2, 0);
  std::vector<FaceSpec> current = faces;
  for (;;) {
    if (static_cast<int>(out.size()) >= extreme_cap) break;
    for (std::size_t k = 0; k < active.size(); ++k) {
      auto& face = current[active[k]];
      std::fill(face.top_weights.begin(), face.top_weights.end(), 0.0);
      std::fill(face.bottom_weights.begin(), face.bottom_weights.end(), 0.0);
      face.top_weights[static_cast<std::size_t>(digit[2 * k])] = 1.0;
      face.bottom_weights[static_cast<std::size_t>(digit[2 * k + 1])] = 1.0;
    }
    emit(current);
    std::size_t pos = 0;
    for (; pos < digit.size(); ++pos) {
      const auto& face = faces[active[pos / 2]];
      int radix = static_cast<int>(pos % 2 == 0 ? face.top.size() : face.bottom.size());
      if (++digit[pos] < radix) break;
      digit[pos] = 0;
    }
    if (pos == digit.size()) break;
  }

  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  auto random_simplex = [&](std::vector<double>& w) {
    double total = 0.0;
    for (double& x : w) total += (x = expo(rng));
    for (double& x : w) x /= total;
  };
  for (int s = 0; s < samples; ++s) {
    std::vector<FaceSpec> flows = faces;
    for (std::size_t i : active) {
      random_simplex(flows[i].top_weights);
      random_simplex(flows[i].bottom_weights);
    }
    emit(flows);
  }
  return out;
}

}  // namespace hyperricci
