#pragma once

#include <string>
#include <vector>

#include "leapx/constructions.hpp"
#include "leapx/graph.hpp"

namespace leapx {

enum class JoinKind { Vertex, Edge, VertexEdge };

std::string join_kind_name(JoinKind k);

/// One of the three subdivision joins. Vertex layout: originals of G first
/// (0..n-1), then G's edge vertices (n..n+m-1), then H1, then H2. The plain
/// vertex and edge joins use the H1 slot for their single H.
struct JoinGraph {
  Graph graph;
  JoinKind kind = JoinKind::Vertex;
  int n = 0, m = 0;    // G
  int n1 = 0, m1 = 0;  // H (or H1)
  int n2 = 0, m2 = 0;  // H2, zero unless kind == VertexEdge
  std::vector<Edge> base_edges;

  int g_original_index(int v) const { return v; }
  int g_edge_index(int j) const { return n + j; }
  int h1_index(int u) const { return n + m + u; }
  int h2_index(int u) const { return n + m + n1 + u; }
  Provenance provenance(int vertex) const;
};

/// S(g) plus all edges between g's original vertices and every vertex of h.
JoinGraph sd_vertex_join(const Graph& g, const Graph& h);
/// S(g) plus all edges between g's edge vertices and every vertex of h.
JoinGraph sd_edge_join(const Graph& g, const Graph& h);
/// S(g) plus complete links originals(g) <-> V(h1) and edge vertices <-> V(h2).
JoinGraph sd_vertex_edge_join(const Graph& g, const Graph& h1, const Graph& h2);

}  // namespace leapx
