#include "leapx/constructions.hpp"

namespace leapx {
namespace {

// Edges among the edge vertices of g: one per pair of adjacent edges,
// expressed with edge ids shifted by `offset`.
std::vector<Edge> adjacent_edge_pairs(const Graph& g, int offset) {
  std::vector<Edge> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        int a = g.edge_index(v, nb[i]);
        int b = g.edge_index(v, nb[j]);
        out.emplace_back(offset + a, offset + b);
      }
  }
  return out;
}

std::vector<Edge> incidence_edges(const Graph& g) {
  std::vector<Edge> out;
  const int n = g.vertex_count();
  for (int j = 0; j < g.edge_count(); ++j) {
    auto [u, v] = g.edges()[j];
    out.emplace_back(u, n + j);
    out.emplace_back(v, n + j);
  }
  return out;
}

DerivedGraph make_derived(DerivedKind kind, const Graph& g,
                          std::vector<Edge> edges, int vertex_count) {
  DerivedGraph d;
  d.kind = kind;
  d.base_n = g.vertex_count();
  d.base_m = g.edge_count();
  d.base_edges = g.edges();
  d.graph = Graph::from_edge_list(vertex_count, edges);
  return d;
}

}  // namespace

std::string provenance_class_name(Provenance::Kind k) {
  switch (k) {
    case Provenance::Kind::Original: return "original";
    case Provenance::Kind::EdgeVertex: return "edge";
    case Provenance::Kind::H1: return "h1";
    case Provenance::Kind::H2: return "h2";
  }
  return "?";
}

std::string derived_kind_name(DerivedKind k) {
  switch (k) {
    case DerivedKind::Line: return "line";
    case DerivedKind::Subdivision: return "S";
    case DerivedKind::Q: return "Q";
    case DerivedKind::R: return "R";
    case DerivedKind::Total: return "T";
  }
  return "?";
}

Provenance DerivedGraph::provenance(int vertex) const {
  if (kind == DerivedKind::Line)
    return {Provenance::Kind::EdgeVertex, vertex, -1};
  if (vertex < base_n) return {Provenance::Kind::Original, vertex, -1};
  return {Provenance::Kind::EdgeVertex, vertex - base_n, -1};
}

DerivedGraph line_graph(const Graph& g) {
  return make_derived(DerivedKind::Line, g, adjacent_edge_pairs(g, 0),
                      g.edge_count());
}

DerivedGraph subdivision(const Graph& g) {
  return make_derived(DerivedKind::Subdivision, g, incidence_edges(g),
                      g.vertex_count() + g.edge_count());
}

DerivedGraph q_graph(const Graph& g) {
  auto edges = incidence_edges(g);
  auto line = adjacent_edge_pairs(g, g.vertex_count());
  edges.insert(edges.end(), line.begin(), line.end());
  return make_derived(DerivedKind::Q, g, std::move(edges),
                      g.vertex_count() + g.edge_count());
}

DerivedGraph r_graph(const Graph& g) {
  auto edges = g.edges();
  auto inc = incidence_edges(g);
  edges.insert(edges.end(), inc.begin(), inc.end());
  return make_derived(DerivedKind::R, g, std::move(edges),
                      g.vertex_count() + g.edge_count());
}

DerivedGraph total_graph(const Graph& g) {
  auto edges = g.edges();
  auto inc = incidence_edges(g);
  auto line = adjacent_edge_pairs(g, g.vertex_count());
  edges.insert(edges.end(), inc.begin(), inc.end());
  edges.insert(edges.end(), line.begin(), line.end());
  return make_derived(DerivedKind::Total, g, std::move(edges),
                      g.vertex_count() + g.edge_count());
}

DerivedGraph derive(DerivedKind kind, const Graph& g) {
  switch (kind) {
    case DerivedKind::Line: return line_graph(g);
    case DerivedKind::Subdivision: return subdivision(g);
    case DerivedKind::Q: return q_graph(g);
    case DerivedKind::R: return r_graph(g);
    case DerivedKind::Total: return total_graph(g);
  }
  throw Error("unknown derived kind");
}

namespace {

template <typename T>
SplitValues split_impl(const DerivedGraph& d, std::span<const T> per_vertex) {
  if (static_cast<int>(per_vertex.size()) != d.graph.vertex_count())
    throw Error("split_by_provenance: value vector size mismatch");
  SplitValues s;
  s.original.assign(d.has_originals() ? d.base_n : 0, 0);
  s.edge_vertex.assign(d.base_m, 0);
  for (int v = 0; v < d.graph.vertex_count(); ++v) {
    auto p = d.provenance(v);
    if (p.kind == Provenance::Kind::Original)
      s.original[p.index] = per_vertex[v];
    else
      s.edge_vertex[p.index] = per_vertex[v];
  }
  return s;
}

}  // namespace

SplitValues split_by_provenance(const DerivedGraph& d,
                                std::span<const int> per_vertex) {
  return split_impl(d, per_vertex);
}

SplitValues split_by_provenance(const DerivedGraph& d,
                                std::span<const long long> per_vertex) {
  return split_impl(d, per_vertex);
}

}  // namespace leapx
