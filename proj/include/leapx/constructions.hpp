#pragma once

#include <span>
#include <string>
#include <vector>

#include "leapx/graph.hpp"

namespace leapx {

/// Where a vertex of a derived graph came from.
struct Provenance {
  enum class Kind { Original, EdgeVertex, H1, H2 };
  Kind kind = Kind::Original;
  int index = -1;  // vertex of G, or edge id of G, or vertex of H
  int copy = -1;   // copy number for corona H vertices, -1 elsewhere

  bool operator==(const Provenance&) const = default;
};

std::string provenance_class_name(Provenance::Kind k);

enum class DerivedKind { Line, Subdivision, Q, R, Total };

std::string derived_kind_name(DerivedKind k);

/// A graph derived from G together with the map back to V(G) and E(G).
///
/// Vertex layout for S/Q/R/T: original vertices keep their indices 0..n-1
/// and the vertex for the j-th edge (lexicographic) is n+j. The line graph
/// has only edge vertices, numbered 0..m-1 in the same edge order.
struct DerivedGraph {
  Graph graph;
  DerivedKind kind = DerivedKind::Subdivision;
  int base_n = 0;
  int base_m = 0;
  std::vector<Edge> base_edges;  // lexicographic; edge j = base_edges[j]

  bool has_originals() const { return kind != DerivedKind::Line; }
  int original_index(int v) const { return v; }
  int edge_vertex_index(int j) const {
    return kind == DerivedKind::Line ? j : base_n + j;
  }
  Provenance provenance(int vertex) const;
};

DerivedGraph line_graph(const Graph& g);
DerivedGraph subdivision(const Graph& g);
DerivedGraph q_graph(const Graph& g);
DerivedGraph r_graph(const Graph& g);
DerivedGraph total_graph(const Graph& g);
DerivedGraph derive(DerivedKind kind, const Graph& g);

/// A per-vertex quantity split by provenance class: values over V(G) indexed
/// by original vertex, values over E(G) indexed by edge id.
struct SplitValues {
  std::vector<long long> original;
  std::vector<long long> edge_vertex;
};

SplitValues split_by_provenance(const DerivedGraph& d,
                                std::span<const int> per_vertex);
SplitValues split_by_provenance(const DerivedGraph& d,
                                std::span<const long long> per_vertex);

}  // namespace leapx
