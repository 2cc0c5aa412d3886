#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperricci/hypergraph.hpp"

namespace hyperricci {

// All conditions are stated on potentials u = f / d.
enum class LipschitzFlavor {
  Lip,              // u(a) - u(b) <= d(a, b)
  Truncated,        // Lip and max u <= diam
  Pinned,           // Lip and u(x) - u(y) = d(x, y)
  TruncatedPinned,  // both
  TwoLevel,         // Pinned and every u(v) in {u(x), u(y)}
};

struct LipschitzRegion {
  LipschitzFlavor flavor = LipschitzFlavor::Lip;
  int x = -1;
  int y = -1;
};

// Unordered adjacent pairs (a < b) of the clique expansion. Since hop
// distance is a path metric, Lipschitz on these pairs is Lipschitz overall.
std::vector<std::pair<int, int>> adjacent_pairs(const Hypergraph& h);

// Exact membership test from the distance matrix, up to `tol`.
bool contains(const Hypergraph& h, const LipschitzRegion& region, const Vector& u, double tol = 1e-9);

// Values u(v) may take with every other coordinate fixed and u staying
// Lipschitz: [max_b u(b) - d(b, v), min_b u(b) + d(v, b)].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};
Interval coordinate_interval(const Hypergraph& h, const Vector& u, int v);

// All integer Lipschitz potentials with u(y) = 0 (and u(x) = d(x, y) when
// `pinned`). These are the vertices of the anchored polytope. Returns
// nullopt once more than `cap` points exist.
std::optional<std::vector<Vector>> integer_points(const Hypergraph& h, int x, int y, bool pinned,
                                                  std::size_t cap = 2048);

// A vertex of the anchored polytope maximizing objective'u (LP).
Vector lp_vertex(const Hypergraph& h, int x, int y, bool pinned, const Vector& objective);

struct RegionSample {
  Vector potential;
  bool is_vertex = false;
};

// Seeded samples of the region normalised to min u = 0 (every member of
// the truncated flavors is a translate of one of these): half random
// objective LP vertices, half random chords between them.
std::vector<RegionSample> sample_region(const Hypergraph& h, const LipschitzRegion& region, int count,
                                        std::uint64_t seed = 0);

}  // namespace hyperricci
