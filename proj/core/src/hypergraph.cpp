#include "hyperricci/hypergraph.hpp"

#include <cmath>
#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <utility>

namespace hyperricci {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

}  // namespace

MetricCache distance_matrix(int n, std::span<const Hyperedge> edges) {
  MetricCache m;
  m.n = n;
  m.deg.assign(static_cast<std::size_t>(n), 0.0);
  std::vector<std::vector<int>> incidence(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (int v : edges[i].vertices) {
      m.deg[static_cast<std::size_t>(v)] += edges[i].weight;
      incidence[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    }
  }

  m.dist.assign(static_cast<std::size_t>(n) * n, kUnreached);
  std::vector<char> edge_used(edges.size());
  for (int s = 0; s < n; ++s) {
    auto row = m.dist.begin() + static_cast<std::ptrdiff_t>(s) * n;
    std::fill(edge_used.begin(), edge_used.end(), 0);
    std::deque<int> queue{s};
    row[s] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int e : incidence[static_cast<std::size_t>(v)]) {
        if (edge_used[static_cast<std::size_t>(e)]) continue;
        edge_used[static_cast<std::size_t>(e)] = 1;
        for (int w : edges[static_cast<std::size_t>(e)].vertices) {
          if (row[w] == kUnreached) {
            row[w] = row[v] + 1;
            queue.push_back(w);
          }
        }
      }
    }
    for (int t = 0; t < n; ++t) {
      if (row[t] == kUnreached) throw Disconnected(s, t);
    }
  }

  m.diam = n > 0 ? *std::max_element(m.dist.begin(), m.dist.end()) : 0;
  m.vol = 0.0;
  for (double d : m.deg) m.vol += d;
  return m;
}

Hypergraph::Hypergraph(int n, std::vector<Hyperedge> edges, bool allow_multi)
    : n_(n), edges_(std::move(edges)), allow_multi_(allow_multi) {
  if (n_ < 1) throw ValidationError("hypergraph needs at least one vertex");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (e.vertices.empty()) {
      throw ValidationError("hyperedge " + std::to_string(i) + " is empty");
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw ValidationError("hyperedge " + std::to_string(i) + " has non-positive weight");
    }
    std::sort(e.vertices.begin(), e.vertices.end());
    if (std::adjacent_find(e.vertices.begin(), e.vertices.end()) != e.vertices.end()) {
      throw ValidationError("hyperedge " + std::to_string(i) + " repeats a vertex");
    }
    if (e.vertices.front() < 0 || e.vertices.back() >= n_) {
      throw ValidationError("hyperedge " + std::to_string(i) + " has a vertex out of range");
    }
  }
  if (!allow_multi_) {
    std::set<std::vector<int>> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (!seen.insert(edges_[i].vertices).second) {
        throw ValidationError("duplicate hyperedge " + std::to_string(i) +
                              " (multi-hyperedges require allow_multi)");
      }
    }
  }
  incidence_.assign(static_cast<std::size_t>(n_), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (int v : edges_[i].vertices) incidence_[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
  }
  metric_ = distance_matrix(n_, edges_);
  for (int v = 0; v < n_; ++v) {
    if (!(metric_.deg[static_cast<std::size_t>(v)] > 0.0)) {
      throw ValidationError("vertex " + std::to_string(v) + " lies in no hyperedge");
    }
  }
}

bool Hypergraph::is_graph() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Hyperedge& e) { return e.vertices.size() == 2; });
}

double Hypergraph::pair_weight(int a, int b) const {
  if (a > b) std::swap(a, b);
  double w = 0.0;
  for (int e : incident(a)) {
    const auto& vs = edges_[static_cast<std::size_t>(e)].vertices;
    if (vs.size() == 2 && vs[0] == a && vs[1] == b) w += edges_[static_cast<std::size_t>(e)].weight;
  }
  return w;
}

void Hypergraph::set_names(std::vector<std::string> names) {
  if (!names.empty() && static_cast<int>(names.size()) != n_) {
    throw ValidationError("vertex name table must have one entry per vertex");
  }
  names_ = std::move(names);
}

std::string Hypergraph::name(int v) const {
  if (!names_.empty() && !names_[static_cast<std::size_t>(v)].empty()) return names_[static_cast<std::size_t>(v)];
  return std::to_string(v);
}

std::optional<int> Hypergraph::find_vertex(const std::string& label) const {
  for (int v = 0; v < n_; ++v) {
    if (!names_.empty() && names_[static_cast<std::size_t>(v)] == label) return v;
  }
  try {
    std::size_t pos = 0;
    int v = std::stoi(label, &pos);
    if (pos == label.size() && v >= 0 && v < n_) return v;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

Hypergraph clique_expansion(const Hypergraph& h) {
  const int n = h.num_vertices();
  std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < e.vertices.size(); ++j) {
        adj[static_cast<std::size_t>(e.vertices[i]) * n + e.vertices[j]] = 1;
      }
    }
  }
  std::vector<Hyperedge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (adj[static_cast<std::size_t>(a) * n + b]) edges.push_back({{a, b}, 1.0});
    }
  }
  if (n == 1) edges.push_back({{0}, 1.0});
  Hypergraph g(n, std::move(edges));
  g.set_names(h.names());
  return g;
}

double weighted_inner(const Hypergraph& h, const Vector& f, const Vector& g) {
  double s = 0.0;
  for (int v = 0; v < h.num_vertices(); ++v) s += f[v] * g[v] / h.degree(v);
  return s;
}

double weighted_norm(const Hypergraph& h, const Vector& f) { return std::sqrt(weighted_inner(h, f, f)); }

Vector to_potential(const Hypergraph& h, const Vector& f) {
  Vector u(h.num_vertices());
  for (int v = 0; v < h.num_vertices(); ++v) u[v] = f[v] / h.degree(v);
  return u;
}

Vector from_potential(const Hypergraph& h, const Vector& u) {
  Vector f(h.num_vertices());
  for (int v = 0; v < h.num_vertices(); ++v) f[v] = u[v] * h.degree(v);
  return f;
}

double pairing(const Hypergraph& h, const Vector& g, int x, int y) {
  return g[x] / h.degree(x) - g[y] / h.degree(y);
}

Vector delta(const Hypergraph& h, int v) {
  Vector d = Vector::Zero(h.num_vertices());
  d[v] = 1.0;
  return d;
}

Vector degree_vector(const Hypergraph& h) {
  return Eigen::Map<const Vector>(h.metric().deg.data(), h.num_vertices());
}

}  // namespace hyperricci
