#include "leapx/graph.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <random>
#include <string>

namespace leapx {
namespace {

// Deterministic draw in [0, bound); modulo bias is irrelevant at these sizes.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

double draw_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph Graph::from_edge_list(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw InvalidGraph("vertex count must be non-negative");
  Graph g;
  g.n_ = n;
  g.adj_.resize(n);
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v)
      throw InvalidGraph("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidGraph("edge endpoint out of range: (" + std::to_string(u) +
                         "," + std::to_string(v) + ")");
    if (u > v) std::swap(u, v);
    normalized.emplace_back(u, v);
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()),
                   normalized.end());
  g.edges_ = std::move(normalized);
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

Graph Graph::empty(int n) { return from_edge_list(n, {}); }

Graph Graph::complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return from_edge_list(n, e);
}

Graph Graph::path(int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return from_edge_list(n, e);
}

Graph Graph::cycle(int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  if (n >= 3) e.emplace_back(0, n - 1);
  return from_edge_list(n, e);
}

Graph Graph::star(int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(0, v);
  return from_edge_list(n, e);
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

Graph Graph::permuted(const std::vector<int>& perm) const {
  std::vector<Edge> e;
  e.reserve(edges_.size());
  for (auto [u, v] : edges_) e.emplace_back(perm[u], perm[v]);
  return from_edge_list(n_, e);
}

bool DistanceMatrix::all_reachable() const {
  for (int v : d_)
    if (v == kUnreachable) return false;
  return true;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.vertex_count(), DistanceMatrix::kUnreachable);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (dist[w] == DistanceMatrix::kUnreachable) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  DistanceMatrix m(n);
  for (int s = 0; s < n; ++s) {
    auto dist = bfs_distances(g, s);
    for (int v = 0; v < n; ++v) m.at(s, v) = dist[v];
  }
  return m;
}

EccentricityProfile eccentricities(const Graph& g) {
  const int n = g.vertex_count();
  EccentricityProfile p;
  p.ecc.assign(n, 0);
  for (int s = 0; s < n; ++s) {
    auto dist = bfs_distances(g, s);
    int e = 0;
    for (int v = 0; v < n; ++v) {
      if (dist[v] == DistanceMatrix::kUnreachable)
        throw DisconnectedGraph("eccentricity of a disconnected graph");
      e = std::max(e, dist[v]);
    }
    p.ecc[s] = e;
    p.diameter = std::max(p.diameter, e);
    p.ecc_classes[e].push_back(s);
    if (e == 1) p.full_vertices.push_back(s);
  }
  return p;
}

DegreeVector degree_vector(const Graph& g, int k) {
  if (k < 1) throw Error("degree_vector requires k >= 1");
  DegreeVector dv;
  dv.k = k;
  dv.d.assign(g.vertex_count(), 0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    auto dist = bfs_distances(g, s);
    for (int v = 0; v < g.vertex_count(); ++v)
      if (dist[v] == k) ++dv.d[s];
  }
  return dv;
}

std::vector<int> second_degrees(const Graph& g) {
  return degree_vector(g, 2).d;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) {
    return d == DistanceMatrix::kUnreachable;
  });
}

bool is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          q.push(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<int> girth(const Graph& g) {
  // Shortest cycle through edge (u,v) = 1 + shortest u-v path avoiding that
  // edge. Brute force over edges; exact and cheap at desk scale.
  int best = -1;
  for (auto [u, v] : g.edges()) {
    std::vector<int> dist(g.vertex_count(), DistanceMatrix::kUnreachable);
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int w : g.neighbors(x)) {
        if (x == u && w == v) continue;  // skip the removed edge
        if (x == v && w == u) continue;
        if (dist[w] == DistanceMatrix::kUnreachable) {
          dist[w] = dist[x] + 1;
          q.push(w);
        }
      }
    }
    if (dist[v] != DistanceMatrix::kUnreachable) {
      int cyc = dist[v] + 1;
      if (best < 0 || cyc < best) best = cyc;
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

bool is_triangle_free(const Graph& g) {
  auto gr = girth(g);
  return !gr.has_value() || *gr >= 4;
}

bool is_c3_c4_free(const Graph& g) {
  auto gr = girth(g);
  return !gr.has_value() || *gr >= 5;
}

bool is_star(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2 || !is_connected(g)) return false;
  if (n == 2) return g.edge_count() == 1;
  int centers = 0, leaves = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1)
      ++centers;
    else if (g.degree(v) == 1)
      ++leaves;
  }
  return centers == 1 && leaves == n - 1;
}

int star_center(const Graph& g) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) return v;
  return -1;
}

bool pendant_ecc_property(const Graph& g) {
  auto prof = eccentricities(g);
  const int n = g.vertex_count();
  std::vector<int> pendants;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 1) pendants.push_back(v);
  if (pendants.empty()) return false;
  for (int v = 0; v < n; ++v) {
    auto dist = bfs_distances(g, v);
    bool realized = false;
    for (int u : pendants) {
      if (dist[u] == prof.ecc[v]) {
        realized = true;
        break;
      }
    }
    if (!realized) return false;
  }
  return true;
}

bool enumerate_connected_until(int n_max,
                               const std::function<bool(const Graph&)>& fn) {
  if (n_max > kExhaustiveCap)
    throw CapExceeded("exhaustive enumeration capped at n = " +
                      std::to_string(kExhaustiveCap));
  for (int n = 1; n <= n_max; ++n) {
    const int pairs = n * (n - 1) / 2;
    const std::uint32_t total = 1u << pairs;
    std::vector<Edge> pair_order;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pair_order.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      std::vector<Edge> edges;
      for (int b = 0; b < pairs; ++b)
        if (mask & (1u << b)) edges.push_back(pair_order[b]);
      Graph g = Graph::from_edge_list(n, edges);
      if (is_connected(g) && fn(g)) return true;
    }
  }
  return false;
}

void enumerate_connected(int n_max,
                         const std::function<void(const Graph&)>& fn) {
  enumerate_connected_until(n_max, [&fn](const Graph& g) {
    fn(g);
    return false;
  });
}

std::vector<Graph> connected_graphs(int n_max) {
  std::vector<Graph> out;
  enumerate_connected(n_max, [&](const Graph& g) { out.push_back(g); });
  return out;
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n <= 1) return Graph::empty(std::max(n, 0));
  if (n == 2) return Graph::from_edge_list(2, {{0, 1}});
  std::mt19937_64 rng(seed);
  std::vector<int> pruefer(n - 2);
  for (int& x : pruefer) x = static_cast<int>(draw_below(rng, n));
  std::vector<int> deg(n, 1);
  for (int x : pruefer) ++deg[x];
  std::vector<Edge> edges;
  // Smallest-leaf decode.
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push(v);
  for (int x : pruefer) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--deg[x] == 1) leaves.push(x);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  edges.emplace_back(a, b);
  return Graph::from_edge_list(n, edges);
}

Graph random_connected(int n, double p, std::uint64_t seed) {
  Graph tree = random_tree(n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<Edge> edges = tree.edges();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (tree.has_edge(u, v)) continue;
      if (draw_unit(rng) < p) edges.emplace_back(u, v);
    }
  return Graph::from_edge_list(n, edges);
}

Graph random_bipartite(int a, int b, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v)
      if (draw_unit(rng) < p) edges.emplace_back(u, a + v);
  return Graph::from_edge_list(a + b, edges);
}

}  // namespace leapx
