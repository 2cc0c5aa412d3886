#pragma once

#include <string>
#include <string_view>

#include "hyperricci/hypergraph.hpp"

namespace hyperricci {

enum class Family {
  CompleteGraph,       // K_n
  Cycle,               // C_n
  CompleteHypergraph,  // KH_n: every vertex subset of size >= 2, unit weight
  OneRegular,          // R_{n,1}: one hyperedge covering all vertices
  Fig1,                // {e_V, {x, y, p_1..p_A}}
  Fig2,                // {e_V, {x, p_1..p_A}}
  Fig3,                // {e_V, {p_1..p_A}}
};

struct FamilySpec {
  Family family = Family::OneRegular;
  int n = 0;            // K_n, C_n, KH_n, R_{n,1}
  int A = 0;            // fig families
  int B = 0;
  double w_ev = 1.0;    // weight of the all-vertex hyperedge (fig families)
  double w_e = 1.0;     // weight of the second hyperedge (fig families)
  double w = 1.0;       // weight of the single hyperedge of R_{n,1}

  bool is_fig() const noexcept {
    return family == Family::Fig1 || family == Family::Fig2 || family == Family::Fig3;
  }
  int fig_vertex_count() const noexcept { return A + B + 2; }
};

// Builds the family member. Vertex order for fig families is
// x=0, y=1, p_1..p_A, q_1..q_B; every generated hypergraph carries names.
// Throws InvalidSpec when the parameters are out of range.
Hypergraph generate(const FamilySpec& spec);

// Size of the second hyperedge e of a fig family.
int fig_edge_size(const FamilySpec& spec);

Family parse_family(std::string_view tag);
std::string family_tag(Family f);

}  // namespace hyperricci
