#include "hyperricci/families.hpp"

#include <numeric>

namespace hyperricci {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidSpec("InvalidSpec: " + what);
}

std::vector<std::string> fig_names(int A, int B) {
  std::vector<std::string> names{"x", "y"};
  for (int i = 1; i <= A; ++i) names.push_back("p" + std::to_string(i));
  for (int j = 1; j <= B; ++j) names.push_back("q" + std::to_string(j));
  return names;
}

std::vector<std::string> index_names(int n) {
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
  return names;
}

Hypergraph generate_fig(const FamilySpec& s) {
  require(s.A >= 0 && s.B >= 0, "A and B must be non-negative");
  require(s.A + s.B >= 1, "fig families need A + B >= 1");
  require(s.family != Family::Fig3 || s.A >= 1, "fig3 needs A >= 1");
  require(s.w_ev > 0.0 && s.w_e > 0.0, "fig weights must be positive");

  const int n = s.fig_vertex_count();
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);

  std::vector<int> e;
  if (s.family == Family::Fig1) e = {0, 1};
  if (s.family == Family::Fig2) e = {0};
  for (int i = 0; i < s.A; ++i) e.push_back(2 + i);

  // fig1 with B = 0 makes e coincide with e_V.
  const bool multi = e.size() == all.size();
  Hypergraph h(n, {{all, s.w_ev}, {e, s.w_e}}, multi);
  h.set_names(fig_names(s.A, s.B));
  return h;
}

}  // namespace

int fig_edge_size(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Fig1: return spec.A + 2;
    case Family::Fig2: return spec.A + 1;
    case Family::Fig3: return spec.A;
    default: throw InvalidSpec("InvalidSpec: not a fig family");
  }
}

Hypergraph generate(const FamilySpec& s) {
  switch (s.family) {
    case Family::CompleteGraph: {
      require(s.n >= 2, "K_n needs n >= 2");
      std::vector<Hyperedge> edges;
      for (int a = 0; a < s.n; ++a)
        for (int b = a + 1; b < s.n; ++b) edges.push_back({{a, b}, 1.0});
      Hypergraph h(s.n, std::move(edges));
      h.set_names(index_names(s.n));
      return h;
    }
    case Family::Cycle: {
      require(s.n >= 3, "C_n needs n >= 3");
      std::vector<Hyperedge> edges;
      for (int a = 0; a < s.n; ++a) edges.push_back({{a, (a + 1) % s.n}, 1.0});
      Hypergraph h(s.n, std::move(edges));
      h.set_names(index_names(s.n));
      return h;
    }
    case Family::CompleteHypergraph: {
      require(s.n >= 2 && s.n <= 16, "KH_n needs 2 <= n <= 16");
      std::vector<Hyperedge> edges;
      for (unsigned mask = 1; mask < (1u << s.n); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        Hyperedge e;
        for (int v = 0; v < s.n; ++v)
          if (mask & (1u << v)) e.vertices.push_back(v);
        edges.push_back(std::move(e));
      }
      Hypergraph h(s.n, std::move(edges));
      h.set_names(index_names(s.n));
      return h;
    }
    case Family::OneRegular: {
      require(s.n >= 1, "R_{n,1} needs n >= 1");
      require(s.w > 0.0, "R_{n,1} weight must be positive");
      std::vector<int> all(static_cast<std::size_t>(s.n));
      std::iota(all.begin(), all.end(), 0);
      Hypergraph h(s.n, {{all, s.w}});
      h.set_names(index_names(s.n));
      return h;
    }
    case Family::Fig1:
    case Family::Fig2:
    case Family::Fig3:
      return generate_fig(s);
  }
  throw InvalidSpec("InvalidSpec: unknown family");
}

Family parse_family(std::string_view tag) {
  if (tag == "kn" || tag == "complete") return Family::CompleteGraph;
  if (tag == "cn" || tag == "cycle") return Family::Cycle;
  if (tag == "khn" || tag == "complete-hypergraph") return Family::CompleteHypergraph;
  if (tag == "r1" || tag == "one-regular") return Family::OneRegular;
  if (tag == "fig1") return Family::Fig1;
  if (tag == "fig2") return Family::Fig2;
  if (tag == "fig3") return Family::Fig3;
  throw InvalidSpec("InvalidSpec: unknown family '" + std::string(tag) + "'");
}

std::string family_tag(Family f) {
  switch (f) {
    case Family::CompleteGraph: return "kn";
    case Family::Cycle: return "cn";
    case Family::CompleteHypergraph: return "khn";
    case Family::OneRegular: return "r1";
    case Family::Fig1: return "fig1";
    case Family::Fig2: return "fig2";
    case Family::Fig3: return "fig3";
  }
  return "?";
}

}  // namespace hyperricci
