#pragma once

#include <vector>

#include "leapx/constructions.hpp"
#include "leapx/graph.hpp"

namespace leapx {

/// Double corona over one of the four derived base graphs: X(G) plus a fresh
/// copy of H1 completely joined to each original vertex and a fresh copy of
/// H2 completely joined to each edge vertex.
///
/// Layout: base X(G) occupies 0..n+m-1 (originals then edge vertices), the n
/// copies of H1 follow contiguously (copy i for original i), then the m
/// copies of H2 (copy j for edge j).
struct CoronaGraph {
  Graph graph;
  DerivedKind base_kind = DerivedKind::Subdivision;
  DerivedGraph base;  // X(G), kept for the anchor-eccentricity tables
  int n = 0, m = 0;
  int n1 = 0, m1 = 0;
  int n2 = 0, m2 = 0;

  int g_original_index(int v) const { return v; }
  int g_edge_index(int j) const { return n + j; }
  int h1_copy_index(int copy, int u) const { return n + m + copy * n1 + u; }
  int h2_copy_index(int copy, int u) const {
    return n + m + n * n1 + copy * n2 + u;
  }
  Provenance provenance(int vertex) const;
};

/// kind selects the base construction (Subdivision, Q, R or Total). g must be
/// connected; h1 and h2 must be nonempty but may be disconnected.
CoronaGraph double_corona(DerivedKind kind, const Graph& g, const Graph& h1,
                          const Graph& h2);

/// The claimed second degree of every corona vertex, by provenance class,
/// expressed through base-graph quantities (degrees in G, L(G) and second
/// degrees in X(G)). Compared against BFS ground truth by the claim checks.
std::vector<long long> corona_d2_table(const CoronaGraph& c, const Graph& g,
                                       const Graph& h1, const Graph& h2);

/// The claimed eccentricity of every corona vertex: anchor eccentricity in
/// X(G) plus one on the base side, plus two on the copy side.
std::vector<long long> corona_ecc_table(const CoronaGraph& c);

}  // namespace leapx
