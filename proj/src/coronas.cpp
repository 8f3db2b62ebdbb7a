#include "leapx/coronas.hpp"

namespace leapx {

Provenance CoronaGraph::provenance(int vertex) const {
  if (vertex < n) return {Provenance::Kind::Original, vertex, -1};
  if (vertex < n + m) return {Provenance::Kind::EdgeVertex, vertex - n, -1};
  int rest = vertex - n - m;
  if (rest < n * n1)
    return {Provenance::Kind::H1, rest % n1, rest / n1};
  rest -= n * n1;
  return {Provenance::Kind::H2, rest % n2, rest / n2};
}

CoronaGraph double_corona(DerivedKind kind, const Graph& g, const Graph& h1,
                          const Graph& h2) {
  if (kind == DerivedKind::Line)
    throw Error("double_corona base must be one of S, Q, R, T");
  if (!is_connected(g)) throw DisconnectedInput("corona base g must be connected");
  if (h1.vertex_count() == 0 || h2.vertex_count() == 0)
    throw EmptyH("corona H factors must have at least one vertex");

  CoronaGraph c;
  c.base_kind = kind;
  c.base = derive(kind, g);
  c.n = g.vertex_count();
  c.m = g.edge_count();
  c.n1 = h1.vertex_count();
  c.m1 = h1.edge_count();
  c.n2 = h2.vertex_count();
  c.m2 = h2.edge_count();

  std::vector<Edge> edges = c.base.graph.edges();
  for (int i = 0; i < c.n; ++i) {
    for (auto [u, v] : h1.edges())
      edges.emplace_back(c.h1_copy_index(i, u), c.h1_copy_index(i, v));
    for (int u = 0; u < c.n1; ++u)
      edges.emplace_back(c.g_original_index(i), c.h1_copy_index(i, u));
  }
  for (int j = 0; j < c.m; ++j) {
    for (auto [u, v] : h2.edges())
      edges.emplace_back(c.h2_copy_index(j, u), c.h2_copy_index(j, v));
    for (int u = 0; u < c.n2; ++u)
      edges.emplace_back(c.g_edge_index(j), c.h2_copy_index(j, u));
  }
  c.graph = Graph::from_edge_list(c.n + c.m + c.n * c.n1 + c.m * c.n2, edges);
  return c;
}

std::vector<long long> corona_d2_table(const CoronaGraph& c, const Graph& g,
                                       const Graph& h1, const Graph& h2) {
  const auto d2_base = second_degrees(c.base.graph);
  // Degree of edge j in L(G) is d(u) + d(v) - 2.
  auto line_degree = [&](int j) {
    auto [u, v] = c.base.base_edges[j];
    return static_cast<long long>(g.degree(u)) + g.degree(v) - 2;
  };

  std::vector<long long> t(c.graph.vertex_count(), 0);
  const long long n1 = c.n1, n2 = c.n2;
  for (int v = 0; v < c.n; ++v) {
    long long d1g = g.degree(v);
    switch (c.base_kind) {
      case DerivedKind::Subdivision: t[v] = (n2 + 1) * d1g; break;
      case DerivedKind::Q: t[v] = d2_base[v] + n2 * d1g; break;
      case DerivedKind::R:
      case DerivedKind::Total: t[v] = d2_base[v] + (n1 + n2) * d1g; break;
      case DerivedKind::Line: break;
    }
  }
  for (int j = 0; j < c.m; ++j) {
    int ev = c.g_edge_index(j);
    switch (c.base_kind) {
      case DerivedKind::Subdivision: t[ev] = 2 * n1 + line_degree(j); break;
      case DerivedKind::Q: t[ev] = d2_base[ev] + 2 * n1 + n2 * line_degree(j); break;
      case DerivedKind::R: t[ev] = d2_base[ev] + 2 * n1; break;
      case DerivedKind::Total:
        t[ev] = d2_base[ev] + 2 * n1 + n2 * line_degree(j);
        break;
      case DerivedKind::Line: break;
    }
  }
  const bool doubled =
      c.base_kind == DerivedKind::R || c.base_kind == DerivedKind::Total;
  for (int i = 0; i < c.n; ++i) {
    long long anchor = doubled ? 2 * g.degree(i) : g.degree(i);
    for (int u = 0; u < c.n1; ++u)
      t[c.h1_copy_index(i, u)] = (n1 - 1) - h1.degree(u) + anchor;
  }
  const bool edge_links =
      c.base_kind == DerivedKind::Q || c.base_kind == DerivedKind::Total;
  for (int j = 0; j < c.m; ++j) {
    long long anchor = 2 + (edge_links ? line_degree(j) : 0);
    for (int u = 0; u < c.n2; ++u)
      t[c.h2_copy_index(j, u)] = (n2 - 1) - h2.degree(u) + anchor;
  }
  return t;
}

std::vector<long long> corona_ecc_table(const CoronaGraph& c) {
  auto prof = eccentricities(c.base.graph);
  std::vector<long long> t(c.graph.vertex_count(), 0);
  for (int v = 0; v < c.n + c.m; ++v) t[v] = prof.ecc[v] + 1;
  for (int i = 0; i < c.n; ++i)
    for (int u = 0; u < c.n1; ++u)
      t[c.h1_copy_index(i, u)] = prof.ecc[c.g_original_index(i)] + 2;
  for (int j = 0; j < c.m; ++j)
    for (int u = 0; u < c.n2; ++u)
      t[c.h2_copy_index(j, u)] = prof.ecc[c.g_edge_index(j)] + 2;
  return t;
}

}  // namespace leapx
