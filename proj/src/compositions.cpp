#include "leapx/compositions.hpp"

namespace leapx {
namespace {

void require_connected_factor(const Graph& g, const char* which) {
  if (!is_connected(g))
    throw DisconnectedInput(std::string(which) + " must be connected");
}

// Edges of S(g) with originals at 0..n-1 and edge vertex j at n+j, plus h's
// own edges shifted to `h_offset`.
void append_subdivision(const Graph& g, std::vector<Edge>& edges) {
  const int n = g.vertex_count();
  for (int j = 0; j < g.edge_count(); ++j) {
    auto [u, v] = g.edges()[j];
    edges.emplace_back(u, n + j);
    edges.emplace_back(v, n + j);
  }
}

void append_shifted(const Graph& h, int offset, std::vector<Edge>& edges) {
  for (auto [u, v] : h.edges()) edges.emplace_back(offset + u, offset + v);
}

JoinGraph make_join(JoinKind kind, const Graph& g, const Graph& h1,
                    const Graph* h2) {
  require_connected_factor(g, "g");
  require_connected_factor(h1, kind == JoinKind::VertexEdge ? "h1" : "h");
  if (h2) require_connected_factor(*h2, "h2");
  if (g.vertex_count() < 2)
    throw DisconnectedInput("join base graph needs at least 2 vertices");

  JoinGraph j;
  j.kind = kind;
  j.n = g.vertex_count();
  j.m = g.edge_count();
  j.n1 = h1.vertex_count();
  j.m1 = h1.edge_count();
  j.n2 = h2 ? h2->vertex_count() : 0;
  j.m2 = h2 ? h2->edge_count() : 0;
  j.base_edges = g.edges();

  std::vector<Edge> edges;
  append_subdivision(g, edges);
  append_shifted(h1, j.h1_index(0), edges);
  if (h2) append_shifted(*h2, j.h2_index(0), edges);

  if (kind == JoinKind::Vertex || kind == JoinKind::VertexEdge)
    for (int v = 0; v < j.n; ++v)
      for (int u = 0; u < j.n1; ++u) edges.emplace_back(v, j.h1_index(u));
  if (kind == JoinKind::Edge)
    for (int e = 0; e < j.m; ++e)
      for (int u = 0; u < j.n1; ++u)
        edges.emplace_back(j.g_edge_index(e), j.h1_index(u));
  if (kind == JoinKind::VertexEdge)
    for (int e = 0; e < j.m; ++e)
      for (int u = 0; u < j.n2; ++u)
        edges.emplace_back(j.g_edge_index(e), j.h2_index(u));

  j.graph = Graph::from_edge_list(j.n + j.m + j.n1 + j.n2, edges);
  return j;
}

}  // namespace

std::string join_kind_name(JoinKind k) {
  switch (k) {
    case JoinKind::Vertex: return "vertex";
    case JoinKind::Edge: return "edge";
    case JoinKind::VertexEdge: return "vertex-edge";
  }
  return "?";
}

Provenance JoinGraph::provenance(int vertex) const {
  if (vertex < n) return {Provenance::Kind::Original, vertex, -1};
  if (vertex < n + m) return {Provenance::Kind::EdgeVertex, vertex - n, -1};
  if (vertex < n + m + n1)
    return {Provenance::Kind::H1, vertex - n - m, -1};
  return {Provenance::Kind::H2, vertex - n - m - n1, -1};
}

JoinGraph sd_vertex_join(const Graph& g, const Graph& h) {
  return make_join(JoinKind::Vertex, g, h, nullptr);
}

JoinGraph sd_edge_join(const Graph& g, const Graph& h) {
  return make_join(JoinKind::Edge, g, h, nullptr);
}

JoinGraph sd_vertex_edge_join(const Graph& g, const Graph& h1,
                              const Graph& h2) {
  return make_join(JoinKind::VertexEdge, g, h1, &h2);
}

}  // namespace leapx
