#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "leapx/errors.hpp"

namespace leapx {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices {0..n-1}.
///
/// Edges are normalized to u < v and stored lexicographically sorted; that
/// ordering is the canonical edge numbering every derived construction uses,
/// so provenance maps stay deterministic and serializable.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an explicit edge list. Rejects self-loops and
  /// out-of-range endpoints; duplicate edges collapse silently.
  static Graph from_edge_list(int n, const std::vector<Edge>& edges);

  static Graph empty(int n);
  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  /// K_{1,n-1} with the center at index 0. star(2) is K2.
  static Graph star(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Position of edge {u,v} in the sorted edge list, or -1 if absent.
  int edge_index(int u, int v) const;

  /// Relabeled copy: vertex v becomes perm[v].
  Graph permuted(const std::vector<int>& perm) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Exact unweighted shortest-path distances; kUnreachable marks pairs in
/// different components.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n)
      : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int n() const { return n_; }
  int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  int& at(int u, int v) { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  bool all_reachable() const;

 private:
  int n_ = 0;
  std::vector<int> d_;
};

std::vector<int> bfs_distances(const Graph& g, int source);
DistanceMatrix all_pairs_distances(const Graph& g);

struct EccentricityProfile {
  std::vector<int> ecc;
  int diameter = 0;
  /// Vertices of eccentricity exactly 1 (the full vertices).
  std::vector<int> full_vertices;
  /// alpha -> vertices of eccentricity alpha.
  std::map<int, std::vector<int>> ecc_classes;
};

/// Per-vertex eccentricities. Throws DisconnectedGraph; graphs with fewer
/// than two vertices count as connected.
EccentricityProfile eccentricities(const Graph& g);

struct DegreeVector {
  int k = 1;
  std::vector<int> d;  // d[v] = number of vertices at distance exactly k
};

DegreeVector degree_vector(const Graph& g, int k);
/// d_2 per vertex; works on disconnected graphs (counts within components).
std::vector<int> second_degrees(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// Length of a shortest cycle, or nullopt for acyclic graphs.
std::optional<int> girth(const Graph& g);

bool is_triangle_free(const Graph& g);

/// True iff g has no 3-cycle and no 4-cycle, realized as girth >= 5 or
/// acyclic. This coincides with the induced-subgraph reading: an induced C3
/// is just a C3 subgraph, and a non-induced C4 subgraph has a chord, which
/// yields a C3.
bool is_c3_c4_free(const Graph& g);

/// True iff g is K_{1,n-1} (n >= 2; K2 counts). False on anything else,
/// including disconnected input.
bool is_star(const Graph& g);
/// The unique vertex of degree n-1 in a star with n >= 3; 0 for K2.
int star_center(const Graph& g);

/// True iff every vertex's eccentricity is realized at some pendant
/// (degree-1) vertex.
bool pendant_ecc_property(const Graph& g);

/// Hard cap on exhaustive enumeration (2^21 adjacency masks at n=7).
inline constexpr int kExhaustiveCap = 7;

/// Calls fn once for every labeled connected graph on 1..n_max vertices,
/// in canonical order (n ascending, then edge-mask ascending). Isomorphic
/// duplicates are yielded; that costs time, not correctness.
void enumerate_connected(int n_max, const std::function<void(const Graph&)>& fn);
/// Same order, but stops (returning true) as soon as fn returns true.
bool enumerate_connected_until(int n_max,
                               const std::function<bool(const Graph&)>& fn);
std::vector<Graph> connected_graphs(int n_max);

/// Uniform random labeled tree (Pruefer decode). Deterministic per seed.
Graph random_tree(int n, std::uint64_t seed);
/// Random spanning tree plus each remaining pair independently with
/// probability p. Always connected, deterministic per seed.
Graph random_connected(int n, double p, std::uint64_t seed);
/// Random bipartite graph on sides {0..a-1} and {a..a+b-1}; each cross pair
/// kept with probability p. Connectivity is not guaranteed.
Graph random_bipartite(int a, int b, double p, std::uint64_t seed);

}  // namespace leapx
