#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperricci/families.hpp"
#include "hyperricci/hypergraph.hpp"

namespace hyperricci {

// <L^0 f, delta_x - delta_y> / d(x, y) for the potential u.
double c_objective(const Hypergraph& h, const Vector& u, int x, int y);

struct TwoLevelResult {
  double value = 0.0;
  Vector potential;              // argmin, u(x) = 1 and u(y) = 0
  long long assignments = 0;     // 2^(n-2)
  long long cross_checked = 0;   // assignments re-evaluated with laplacian_l0
  double cross_check_error = 0.0;
};

// C(x, y) on hypergraphs made of one hyperedge covering V plus at most one
// more hyperedge, by enumerating every two-level potential. Each assignment
// is scored with the exact flow formula; every 20th one is re-scored with
// laplacian_l0 and a disagreement above 1e-9 throws SolverFailure. Throws
// UnsupportedStructure for other shapes and for n > 22.
TwoLevelResult c_two_level(const Hypergraph& h, int x, int y);

// True when c_two_level accepts the hypergraph.
bool two_level_supported(const Hypergraph& h);

// The closed forms: R_{n,1} and the three fig families, for the pair
// (x, y) = (0, 1). Throws InvalidSpec for other families.
double c_closed_form(const FamilySpec& spec);

struct GenericResult {
  double value = 0.0;
  Vector potential;
  bool upper_bound = true;  // false once matched against c_two_level
  bool cross_checked = false;
  int evaluations = 0;
};

// Local search for C(x, y) over the pinned Lipschitz set: coordinate
// descent over candidate levels (current levels, their midpoints, interval
// ends), restarted from random two-level and LP-vertex potentials. The
// value is a best-found upper bound unless the shape is covered by
// c_two_level, in which case the two are compared.
GenericResult c_generic(const Hypergraph& h, int x, int y, int budget = 64, std::uint64_t seed = 0);

struct KeyPropertyReport {
  bool two_level = false;    // every u(v) in {u(x), u(y)}
  bool equal_flows = false;  // equal level and equal incidence give equal L^0 f / d
  bool unit_gaps = false;    // every hyperedge gap in {0, 1}
  std::string detail;
  bool all() const noexcept { return two_level && equal_flows && unit_gaps; }
};

// Checks the structural claims about a minimizer u of C on a supported
// hypergraph (u is a potential). Throws PreconditionViolation unless u is
// pinned Lipschitz for (x, y), UnsupportedStructure for other shapes.
KeyPropertyReport verify_key_property(const Hypergraph& h, const Vector& u, int x, int y);

}  // namespace hyperricci
