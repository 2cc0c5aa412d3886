#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hyperricci/errors.hpp"

namespace hyperricci {

using Vector = Eigen::VectorXd;

struct Hyperedge {
  std::vector<int> vertices;  // sorted, unique
  double weight = 1.0;
};

// Degrees and hop distances of a connected hypergraph.
struct MetricCache {
  std::vector<double> deg;
  std::vector<int> dist;  // row-major n x n
  int n = 0;
  int diam = 0;
  double vol = 0.0;

  int distance(int a, int b) const { return dist[static_cast<std::size_t>(a) * n + b]; }
};

// Finite, connected, weighted hypergraph on vertices 0..n-1.
//
// The constructor validates every invariant (nonempty in-range hyperedges,
// positive weights, connectivity, no repeated hyperedge unless allow_multi)
// and throws ValidationError or Disconnected otherwise. Instances are
// immutable afterwards.
class Hypergraph {
 public:
  Hypergraph(int n, std::vector<Hyperedge> edges, bool allow_multi = false);

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Hyperedge> edges() const noexcept { return edges_; }
  const Hyperedge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }
  bool allow_multi() const noexcept { return allow_multi_; }

  const MetricCache& metric() const noexcept { return metric_; }
  double degree(int v) const { return metric_.deg[static_cast<std::size_t>(v)]; }
  int distance(int a, int b) const { return metric_.distance(a, b); }
  int diameter() const noexcept { return metric_.diam; }
  double volume() const noexcept { return metric_.vol; }

  // True iff every hyperedge has exactly two vertices.
  bool is_graph() const noexcept;

  // Sum of weights of hyperedges equal to {a, b} (graph edge weight w_ab).
  double pair_weight(int a, int b) const;

  // Indices of hyperedges containing v.
  const std::vector<int>& incident(int v) const { return incidence_[static_cast<std::size_t>(v)]; }

  // Optional vertex labels (size n when present).
  const std::vector<std::string>& names() const noexcept { return names_; }
  void set_names(std::vector<std::string> names);
  std::string name(int v) const;
  std::optional<int> find_vertex(const std::string& label) const;

 private:
  int n_;
  std::vector<Hyperedge> edges_;
  bool allow_multi_;
  std::vector<std::vector<int>> incidence_;
  MetricCache metric_;
  std::vector<std::string> names_;
};

// Hop distances (one hop = sharing a hyperedge), degrees, diameter, volume.
// Throws Disconnected when some pair has no path.
MetricCache distance_matrix(int n, std::span<const Hyperedge> edges);

// Unweighted graph with an edge between each pair co-contained in a hyperedge.
Hypergraph clique_expansion(const Hypergraph& h);

// D^{-1}-weighted inner product sum_v f(v) g(v) / d_v.
double weighted_inner(const Hypergraph& h, const Vector& f, const Vector& g);
double weighted_norm(const Hypergraph& h, const Vector& f);

// Potential u(v) = f(v) / d_v and its inverse.
Vector to_potential(const Hypergraph& h, const Vector& f);
Vector from_potential(const Hypergraph& h, const Vector& u);

// <g, delta_x - delta_y>_{D^{-1}} = g(x)/d_x - g(y)/d_y.
double pairing(const Hypergraph& h, const Vector& g, int x, int y);

// Characteristic function delta_v.
Vector delta(const Hypergraph& h, int v);

// The degree vector (d_v)_v, i.e. the function with constant potential 1.
Vector degree_vector(const Hypergraph& h);

}  // namespace hyperricci
