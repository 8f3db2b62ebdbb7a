#include <algorithm>

#include "leapx/claims.hpp"
#include "leapx/compositions.hpp"
#include "leapx/constructions.hpp"
#include "leapx/coronas.hpp"
#include "leapx/invariants.hpp"
#include "leapx/io.hpp"

namespace leapx {

std::string statement_kind_name(StatementKind k) {
  switch (k) {
    case StatementKind::Equality: return "EQUALITY";
    case StatementKind::LowerBound: return "LOWER_BOUND";
    case StatementKind::UpperBound: return "UPPER_BOUND";
    case StatementKind::Sandwich: return "SANDWICH";
    case StatementKind::CaseTable: return "CASE_TABLE";
  }
  return "?";
}

std::string claim_status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::EqualityHolds: return "EQUALITY_HOLDS";
    case ClaimStatus::Strict: return "STRICT";
    case ClaimStatus::BoundHolds: return "BOUND_HOLDS";
    case ClaimStatus::Violation: return "VIOLATION";
    case ClaimStatus::NotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

namespace {

using Gs = std::vector<const Graph*>;

std::string describe_instance(const Gs& in) {
  std::string out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (i) out += ";";
    out += write_graph6(*in[i]);
  }
  return out;
}

// Accumulates per-element comparisons; remembers the first failure.
struct Table {
  bool ok = true;
  long long entries = 0;
  std::string witness;

  void eq(long long actual, long long claimed, const std::string& label) {
    ++entries;
    if (ok && actual != claimed) {
      ok = false;
      witness = label + ": actual " + std::to_string(actual) + ", claimed " +
                std::to_string(claimed);
    }
  }
  void between(long long value, long long lo, long long hi,
               const std::string& label) {
    ++entries;
    if (ok && (value < lo || value > hi)) {
      ok = false;
      witness = label + ": " + std::to_string(value) + " outside [" +
                std::to_string(lo) + "," + std::to_string(hi) + "]";
    }
  }
  void at_least(long long value, long long lo, const std::string& label) {
    ++entries;
    if (ok && value < lo) {
      ok = false;
      witness = label + ": " + std::to_string(value) + " below " +
                std::to_string(lo);
    }
  }
  void at_most(long long value, long long hi, const std::string& label) {
    ++entries;
    if (ok && value > hi) {
      ok = false;
      witness = label + ": " + std::to_string(value) + " above " +
                std::to_string(hi);
    }
  }
};

ClaimResult table_result(const Table& t) {
  ClaimResult r;
  r.status = t.ok ? ClaimStatus::EqualityHolds : ClaimStatus::Violation;
  r.lhs = t.entries;
  r.witness = t.witness;
  return r;
}

ClaimResult sandwich_table_result(const Table& t) {
  ClaimResult r;
  r.status = t.ok ? ClaimStatus::BoundHolds : ClaimStatus::Violation;
  r.lhs = t.entries;
  r.witness = t.witness;
  return r;
}

ClaimResult aggregate_sandwich(long long lhs, long long lower, long long upper) {
  ClaimResult r;
  r.lhs = lhs;
  r.lower = lower;
  r.upper = upper;
  r.status = (lhs >= lower && lhs <= upper) ? ClaimStatus::BoundHolds
                                            : ClaimStatus::Violation;
  return r;
}

ClaimResult aggregate_equality(long long lhs, long long rhs) {
  ClaimResult r;
  r.lhs = lhs;
  r.lower = rhs;
  r.upper = rhs;
  r.status = lhs == rhs ? ClaimStatus::EqualityHolds : ClaimStatus::Violation;
  return r;
}

// One-sided inequality whose equality case is claimed to characterize a graph
// class: EQUALITY_HOLDS when equality holds everywhere and the instance is in
// the class, STRICT when both fail, VIOLATION on any other combination.
ClaimResult conditional_result(const Table& direction, bool all_equal,
                               bool on_class, long long lhs, long long bound,
                               bool is_upper) {
  ClaimResult r;
  r.lhs = lhs;
  if (is_upper)
    r.upper = bound;
  else
    r.lower = bound;
  if (!direction.ok) {
    r.status = ClaimStatus::Violation;
    r.witness = direction.witness;
  } else if (all_equal && on_class) {
    r.status = ClaimStatus::EqualityHolds;
  } else if (!all_equal && !on_class) {
    r.status = ClaimStatus::Strict;
  } else {
    r.status = ClaimStatus::Violation;
    r.witness = all_equal ? "equality attained off the stated class"
                          : "strict inequality on the stated class";
  }
  return r;
}

// ---------------------------------------------------------------------------
// shared derived data

struct XData {
  DerivedGraph d;
  EccentricityProfile prof;
  std::vector<int> d2;
};

XData x_data(DerivedKind k, const Graph& g) {
  XData x;
  x.d = derive(k, g);
  x.prof = eccentricities(x.d.graph);
  x.d2 = second_degrees(x.d.graph);
  return x;
}

long long line_degree(const Graph& g, int j) {
  auto [u, v] = g.edges()[j];
  return static_cast<long long>(g.degree(u)) + g.degree(v) - 2;
}

bool connected_all(const Gs& in) {
  return std::all_of(in.begin(), in.end(),
                     [](const Graph* g) { return is_connected(*g); });
}

// ---------------------------------------------------------------------------
// section 2 checks

// Eccentricity sandwich per class in a derived graph: the derived value must
// lie in [scale*base + lo_off, scale*base + hi_off], where base is e(v|G) on
// the original side or e(e|L(G)) on the edge side.
ClaimResult check_ecc_sandwich(const Graph& g, DerivedKind kind, bool edge_side,
                               int scale, int lo_off, int hi_off) {
  auto x = x_data(kind, g);
  Table t;
  if (!edge_side) {
    auto pg = eccentricities(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
      long long base = static_cast<long long>(scale) * pg.ecc[v];
      t.between(x.prof.ecc[x.d.original_index(v)], base + lo_off, base + hi_off,
                "v=" + std::to_string(v));
    }
  } else {
    auto L = line_graph(g);
    auto pL = eccentricities(L.graph);
    for (int j = 0; j < g.edge_count(); ++j) {
      long long base = static_cast<long long>(scale) * pL.ecc[j];
      t.between(x.prof.ecc[x.d.edge_vertex_index(j)], base + lo_off,
                base + hi_off, "e=" + std::to_string(j));
    }
  }
  return sandwich_table_result(t);
}

ClaimResult check_ecc_equality(const Graph& g, DerivedKind kind, bool edge_side,
                               int scale, int offset) {
  auto x = x_data(kind, g);
  Table t;
  if (!edge_side) {
    auto pg = eccentricities(g);
    for (int v = 0; v < g.vertex_count(); ++v)
      t.eq(x.prof.ecc[x.d.original_index(v)],
           static_cast<long long>(scale) * pg.ecc[v] + offset,
           "v=" + std::to_string(v));
  } else {
    auto L = line_graph(g);
    auto pL = eccentricities(L.graph);
    for (int j = 0; j < g.edge_count(); ++j)
      t.eq(x.prof.ecc[x.d.edge_vertex_index(j)],
           static_cast<long long>(scale) * pL.ecc[j] + offset,
           "e=" + std::to_string(j));
  }
  return table_result(t);
}

// Distance relations between S/Q/R/T and G resp. L(G), distinct pairs only
// (the +1 forms are false at distance zero).
ClaimResult check_lem_2_2(const Graph& g) {
  auto dg = all_pairs_distances(g);
  auto L = line_graph(g);
  auto dL = all_pairs_distances(L.graph);
  auto S = subdivision(g), Q = q_graph(g), R = r_graph(g), T = total_graph(g);
  auto dS = all_pairs_distances(S.graph);
  auto dQ = all_pairs_distances(Q.graph);
  auto dR = all_pairs_distances(R.graph);
  auto dT = all_pairs_distances(T.graph);
  const int n = g.vertex_count(), m = g.edge_count();
  Table t;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const std::string lb =
          "v-pair (" + std::to_string(u) + "," + std::to_string(v) + ")";
      long long d = dg.at(u, v);
      t.eq(dS.at(u, v), 2 * d, lb + " in S");
      t.eq(dQ.at(u, v), d + 1, lb + " in Q");
      t.eq(dR.at(u, v), d, lb + " in R");
      t.eq(dT.at(u, v), d, lb + " in T");
    }
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const std::string lb =
          "e-pair (" + std::to_string(a) + "," + std::to_string(b) + ")";
      long long d = dL.at(a, b);
      t.eq(dS.at(S.edge_vertex_index(a), S.edge_vertex_index(b)), 2 * d,
           lb + " in S");
      t.eq(dQ.at(Q.edge_vertex_index(a), Q.edge_vertex_index(b)), d, lb + " in Q");
      t.eq(dR.at(R.edge_vertex_index(a), R.edge_vertex_index(b)), d + 1,
           lb + " in R");
      t.eq(dT.at(T.edge_vertex_index(a), T.edge_vertex_index(b)), d, lb + " in T");
    }
  return table_result(t);
}

ClaimResult check_lem_2_3(const Graph& g) {
  auto rep = index_report(g);
  long long bound = rep.M1 - 2 * rep.m;
  Table dir;
  dir.at_most(rep.sum_d2, bound, "sum d2");
  return conditional_result(dir, rep.sum_d2 == bound, is_c3_c4_free(g),
                            rep.sum_d2, bound, true);
}

ClaimResult check_lem_2_4(const Graph& g, bool edge_side) {
  auto x = x_data(DerivedKind::Subdivision, g);
  Table t;
  if (!edge_side) {
    for (int v = 0; v < g.vertex_count(); ++v)
      t.eq(x.d2[x.d.original_index(v)], g.degree(v), "v=" + std::to_string(v));
  } else {
    for (int j = 0; j < g.edge_count(); ++j)
      t.eq(x.d2[x.d.edge_vertex_index(j)], line_degree(g, j),
           "e=" + std::to_string(j));
  }
  return table_result(t);
}

// Per-element d2 inequality against a claimed value, with a claimed
// equality-iff class (lem-2.9, 2.13, 2.17).
ClaimResult check_d2_conditional(const Graph& g, DerivedKind kind,
                                 bool edge_side, bool ge, bool on_class,
                                 const std::vector<long long>& claimed) {
  auto x = x_data(kind, g);
  Table dir;
  bool all_equal = true;
  long long sum_actual = 0, sum_claimed = 0;
  const int count = edge_side ? g.edge_count() : g.vertex_count();
  for (int i = 0; i < count; ++i) {
    int vtx = edge_side ? x.d.edge_vertex_index(i) : x.d.original_index(i);
    long long actual = x.d2[vtx];
    long long want = claimed[i];
    sum_actual += actual;
    sum_claimed += want;
    if (actual != want) all_equal = false;
    std::string lb = (edge_side ? "e=" : "v=") + std::to_string(i);
    if (ge)
      dir.at_least(actual, want, lb);
    else
      dir.at_most(actual, want, lb);
  }
  return conditional_result(dir, all_equal, on_class, sum_actual, sum_claimed,
                            !ge);
}

std::vector<long long> claimed_q_vertex(const Graph& g) {
  auto d2 = second_degrees(g);
  std::vector<long long> out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    out[v] = static_cast<long long>(g.degree(v)) + d2[v];
  return out;
}

std::vector<long long> claimed_line_sum(const Graph& g) {
  auto L = line_graph(g);
  auto d2L = second_degrees(L.graph);
  std::vector<long long> out(g.edge_count());
  for (int j = 0; j < g.edge_count(); ++j) out[j] = line_degree(g, j) + d2L[j];
  return out;
}

std::vector<long long> claimed_twice_d2(const Graph& g) {
  auto d2 = second_degrees(g);
  std::vector<long long> out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) out[v] = 2LL * d2[v];
  return out;
}

std::vector<long long> claimed_twice_line_degree(const Graph& g) {
  std::vector<long long> out(g.edge_count());
  for (int j = 0; j < g.edge_count(); ++j) out[j] = 2 * line_degree(g, j);
  return out;
}

// Closed forms for the section 2 index bounds, in base-graph invariants.
struct BaseInvariants {
  IndexReport G, L;
};

BaseInvariants base_invariants(const Graph& g) {
  return {index_report(g), index_report(line_graph(g).graph)};
}

long long lxi_of(DerivedKind kind, const Graph& g) {
  return leap_ecc_connectivity(derive(kind, g).graph);
}

// ---------------------------------------------------------------------------
// section 3: joins

struct JoinCtx {
  JoinGraph j;
  EccentricityProfile prof;
  std::vector<int> d2;
};

JoinCtx join_ctx(JoinKind kind, const Gs& in) {
  JoinCtx c;
  switch (kind) {
    case JoinKind::Vertex: c.j = sd_vertex_join(*in[0], *in[1]); break;
    case JoinKind::Edge: c.j = sd_edge_join(*in[0], *in[1]); break;
    case JoinKind::VertexEdge:
      c.j = sd_vertex_edge_join(*in[0], *in[1], *in[2]);
      break;
  }
  c.prof = eccentricities(c.j.graph);
  c.d2 = second_degrees(c.j.graph);
  return c;
}

// Star-case eccentricity tables: the center is the unique vertex of full
// degree; every other class has one fixed value.
ClaimResult check_join_star_ecc(JoinKind kind, const Gs& in, int center_e,
                                int leaf_e, int edge_e, int h_e) {
  auto c = join_ctx(kind, in);
  const Graph& g = *in[0];
  int center = star_center(g);
  Table t;
  for (int v = 0; v < c.j.n; ++v)
    t.eq(c.prof.ecc[c.j.g_original_index(v)], v == center ? center_e : leaf_e,
         "v=" + std::to_string(v));
  for (int j = 0; j < c.j.m; ++j)
    t.eq(c.prof.ecc[c.j.g_edge_index(j)], edge_e, "e=" + std::to_string(j));
  for (int u = 0; u < c.j.n1; ++u)
    t.eq(c.prof.ecc[c.j.h1_index(u)], h_e, "h=" + std::to_string(u));
  if (kind == JoinKind::VertexEdge)
    for (int u = 0; u < c.j.n2; ++u)
      t.eq(c.prof.ecc[c.j.h2_index(u)], h_e, "h2=" + std::to_string(u));
  return table_result(t);
}

ClaimResult check_lem_3_2_ii(const Gs& in) {
  auto c = join_ctx(JoinKind::Vertex, in);
  Table t;
  for (int v = 0; v < c.j.n; ++v)
    t.eq(c.prof.ecc[c.j.g_original_index(v)], 3, "v=" + std::to_string(v));
  int fours = 0;
  for (int j = 0; j < c.j.m; ++j) {
    int e = c.prof.ecc[c.j.g_edge_index(j)];
    if (e == 4) ++fours;
    t.between(e, 3, 4, "e=" + std::to_string(j));
  }
  for (int u = 0; u < c.j.n1; ++u)
    t.eq(c.prof.ecc[c.j.h1_index(u)], 2, "h=" + std::to_string(u));
  auto r = sandwich_table_result(t);
  r.note = fours == 0 ? "all edge-class eccentricities are 3"
                      : "edge-class eccentricity 4 attained on " +
                            std::to_string(fours) + " of " +
                            std::to_string(c.j.m) + " edges";
  return r;
}

ClaimResult check_lem_3_2_iii(const Gs& in) {
  auto c = join_ctx(JoinKind::Vertex, in);
  const Graph& g = *in[0];
  const Graph& h = *in[1];
  Table t;
  for (int v = 0; v < c.j.n; ++v)
    t.eq(c.d2[c.j.g_original_index(v)], c.j.n - 1, "v=" + std::to_string(v));
  for (int j = 0; j < c.j.m; ++j)
    t.eq(c.d2[c.j.g_edge_index(j)], line_degree(g, j) + c.j.n1,
         "e=" + std::to_string(j));
  for (int u = 0; u < c.j.n1; ++u)
    t.eq(c.d2[c.j.h1_index(u)], c.j.n1 - 1 - h.degree(u) + c.j.m,
         "h=" + std::to_string(u));
  return table_result(t);
}

ClaimResult check_lem_3_7_i(const Gs& in) {
  return check_join_star_ecc(JoinKind::Edge, in, 2, 4, 3, 2);
}

ClaimResult check_lem_3_7_ii(const Gs& in) {
  auto c = join_ctx(JoinKind::Edge, in);
  auto pg = eccentricities(*in[0]);
  Table t;
  for (int v = 0; v < c.j.n; ++v)
    t.eq(c.prof.ecc[c.j.g_original_index(v)], pg.ecc[v] == 1 ? 3 : 4,
         "v=" + std::to_string(v));
  for (int j = 0; j < c.j.m; ++j)
    t.eq(c.prof.ecc[c.j.g_edge_index(j)], 3, "e=" + std::to_string(j));
  for (int u = 0; u < c.j.n1; ++u)
    t.eq(c.prof.ecc[c.j.h1_index(u)], 2, "h=" + std::to_string(u));
  return table_result(t);
}

ClaimResult check_lem_3_7_iii(const Gs& in) {
  auto c = join_ctx(JoinKind::Edge, in);
  const Graph& g = *in[0];
  const Graph& h = *in[1];
  Table t;
  for (int v = 0; v < c.j.n; ++v)
    t.eq(c.d2[c.j.g_original_index(v)], g.degree(v) + c.j.n1,
         "v=" + std::to_string(v));
  for (int j = 0; j < c.j.m; ++j)
    t.eq(c.d2[c.j.g_edge_index(j)], c.j.m - 1, "e=" + std::to_string(j));
  for (int u = 0; u < c.j.n1; ++u)
    t.eq(c.d2[c.j.h1_index(u)], c.j.n1 - 1 - h.degree(u) + c.j.n,
         "h=" + std::to_string(u));
  return table_result(t);
}

ClaimResult check_lem_3_11_ii(const Gs& in) {
  auto c = join_ctx(JoinKind::VertexEdge, in);
  Table t;
  for (int v = 0; v < c.j.graph.vertex_count(); ++v)
    t.eq(c.prof.ecc[v], 3, "vertex " + std::to_string(v));
  return table_result(t);
}

ClaimResult check_lem_3_11_iii(const Gs& in) {
  auto c = join_ctx(JoinKind::VertexEdge, in);
  const Graph& h1 = *in[1];
  const Graph& h2 = *in[2];
  Table t;
  for (int v = 0; v < c.j.n; ++v)
    t.eq(c.d2[c.j.g_original_index(v)], c.j.n - 1 + c.j.n2,
         "v=" + std::to_string(v));
  for (int j = 0; j < c.j.m; ++j)
    t.eq(c.d2[c.j.g_edge_index(j)], c.j.m - 1 + c.j.n1,
         "e=" + std::to_string(j));
  for (int u = 0; u < c.j.n1; ++u)
    t.eq(c.d2[c.j.h1_index(u)], c.j.n1 - 1 - h1.degree(u) + c.j.m,
         "h1=" + std::to_string(u));
  for (int u = 0; u < c.j.n2; ++u)
    t.eq(c.d2[c.j.h2_index(u)], c.j.n2 - 1 - h2.degree(u) + c.j.n,
         "h2=" + std::to_string(u));
  return table_result(t);
}

struct JoinParams {
  long long n, m, n1, m1, n2, m2, ell, full;
};

JoinParams join_params(const Gs& in) {
  const Graph& g = *in[0];
  JoinParams p{};
  p.n = g.vertex_count();
  p.m = g.edge_count();
  p.n1 = in[1]->vertex_count();
  p.m1 = in[1]->edge_count();
  p.n2 = in.size() > 2 ? in[2]->vertex_count() : 0;
  p.m2 = in.size() > 2 ? in[2]->edge_count() : 0;
  p.ell = line_graph(g).graph.edge_count();
  p.full = static_cast<long long>(eccentricities(g).full_vertices.size());
  return p;
}

// ---------------------------------------------------------------------------
// section 4: coronas

struct CoronaCtx {
  CoronaGraph c;
  EccentricityProfile prof;
  std::vector<int> d2;
};

CoronaCtx corona_ctx(DerivedKind kind, const Gs& in) {
  CoronaCtx x;
  x.c = double_corona(kind, *in[0], *in[1], *in[2]);
  x.prof = eccentricities(x.c.graph);
  x.d2 = second_degrees(x.c.graph);
  return x;
}

std::string corona_label(const CoronaGraph& c, int vertex) {
  auto p = c.provenance(vertex);
  std::string lb = provenance_class_name(p.kind);
  if (p.copy >= 0) lb += "[" + std::to_string(p.copy) + "]";
  return lb + " #" + std::to_string(p.index);
}

ClaimResult check_corona_ecc(DerivedKind kind, const Gs& in) {
  auto x = corona_ctx(kind, in);
  auto claimed = corona_ecc_table(x.c);
  Table t;
  for (int v = 0; v < x.c.graph.vertex_count(); ++v)
    t.eq(x.prof.ecc[v], claimed[v], corona_label(x.c, v));
  return table_result(t);
}

ClaimResult check_corona_d2(DerivedKind kind, const Gs& in) {
  auto x = corona_ctx(kind, in);
  auto claimed = corona_d2_table(x.c, *in[0], *in[1], *in[2]);
  Table t;
  for (int v = 0; v < x.c.graph.vertex_count(); ++v)
    t.eq(x.d2[v], claimed[v], corona_label(x.c, v));
  return table_result(t);
}

struct CoronaParams {
  IndexReport G, L;
  long long n, m, n1, m1, n2, m2, ell, A, B;
};

CoronaParams corona_params(const Gs& in) {
  CoronaParams p{};
  p.G = index_report(*in[0]);
  p.L = index_report(line_graph(*in[0]).graph);
  p.n = p.G.n;
  p.m = p.G.m;
  p.n1 = in[1]->vertex_count();
  p.m1 = in[1]->edge_count();
  p.n2 = in[2]->vertex_count();
  p.m2 = in[2]->edge_count();
  p.ell = p.L.m;
  p.A = p.n1 * p.n1 - p.n1 - 2 * p.m1;
  p.B = 2 * p.n1 + p.n2 * p.n2 + p.n2 - 2 * p.m2;
  return p;
}

long long corona_lxi(DerivedKind kind, const Gs& in) {
  return leap_ecc_connectivity(double_corona(kind, *in[0], *in[1], *in[2]).graph);
}

long long s_corona_lower(const CoronaParams& p) {
  return 2 * (p.n1 + p.n2 + 1) * p.G.xiC + 2 * p.A * p.G.theta + 2 * p.L.xiC +
         2 * p.B * p.L.theta + 2 * p.ell +
         2 * p.m * (3 * p.n1 + p.n2 * p.n2 + 2 * p.n2 - 2 * p.m2 + 1) +
         2 * p.n * p.A;
}

long long s_corona_upper(const CoronaParams& p) {
  return 2 * (p.n1 + p.n2 + 1) * p.G.xiC + 2 * p.A * p.G.theta + 2 * p.L.xiC +
         2 * p.B * p.L.theta + 4 * p.ell +
         p.m * (10 * p.n1 + 3 * p.n2 * p.n2 + 7 * p.n2 - 6 * p.m2 + 4) +
         3 * p.n * p.A;
}

long long s_corona_bipartite_upper(const CoronaParams& p) {
  return 2 * (p.n1 + p.n2 + 1) * p.G.xiC + 2 * p.A * p.G.theta + 2 * p.L.xiC +
         2 * p.B * p.L.theta + 4 * p.ell +
         p.m * (8 * p.n1 + 3 * p.n2 * p.n2 + 5 * p.n2 - 6 * p.m2 + 2) +
         2 * p.n * p.A;
}

long long q_corona_lower(const CoronaParams& p) {
  return p.G.LxiC + (p.n1 + p.n2 + 1) * p.G.xiC + p.A * p.G.theta +
         2 * p.G.M1 + p.L.LxiC + (2 * p.n2 + 1) * p.L.xiC + p.B * p.L.theta +
         p.L.M1 + 6 * p.n2 * p.ell +
         2 * p.m * (4 * p.n1 + p.n2 * p.n2 + 3 * p.n2 - 2 * p.m2) +
         3 * p.n * p.A;
}

long long q_corona_upper(const CoronaParams& p) {
  return p.G.LxiC + (p.n1 + p.n2 + 1) * p.G.xiC + p.A * p.G.theta +
         2 * p.G.M1 + p.L.LxiC + (2 * p.n2 + 1) * p.L.xiC + p.B * p.L.theta +
         2 * p.L.M1 + 10 * p.n2 * p.ell +
         p.m * (10 * p.n1 + 3 * p.n2 * p.n2 + 7 * p.n2 - 6 * p.m2) +
         3 * p.n * p.A;
}

long long r_corona_lower(const CoronaParams& p) {
  return 2 * p.G.LxiC + (3 * p.n1 + p.n2) * p.G.xiC + p.A * p.G.theta +
         2 * p.G.M1 + 2 * p.L.xiC + p.B * p.L.theta + 8 * p.ell +
         p.m * (14 * p.n1 + 3 * p.n2 * p.n2 + 5 * p.n2 - 6 * p.m2 - 4) +
         2 * p.n * p.A;
}

long long r_corona_upper(const CoronaParams& p) {
  return 2 * p.G.LxiC + (3 * p.n1 + p.n2) * p.G.xiC + p.A * p.G.theta +
         4 * p.G.M1 + 2 * p.L.xiC + p.B * p.L.theta + 8 * p.ell +
         p.m * (20 * p.n1 + 3 * p.n2 * p.n2 + 7 * p.n2 - 6 * p.m2 - 8) +
         3 * p.n * p.A;
}

long long t_corona_lower(const CoronaParams& p) {
  return 2 * p.G.LxiC + (3 * p.n1 + p.n2) * p.G.xiC + 2 * p.G.M1 +
         p.A * p.G.theta + p.L.LxiC + (2 * p.n2 + 1) * p.L.xiC + p.L.M1 +
         p.B * p.L.theta + 6 * p.n2 * p.ell +
         2 * p.m * (6 * p.n1 + p.n2 * p.n2 + 2 * p.n2 - 2 * p.m2 - 2) +
         2 * p.n * p.A;
}

long long t_corona_upper(const CoronaParams& p) {
  return 2 * p.G.LxiC + (3 * p.n1 + p.n2) * p.G.xiC + 4 * p.G.M1 +
         p.A * p.G.theta + p.L.LxiC + (2 * p.n2 + 1) * p.L.xiC + 2 * p.L.M1 +
         p.B * p.L.theta + 10 * p.n2 * p.ell +
         p.m * (20 * p.n1 + 3 * p.n2 * p.n2 + 7 * p.n2 - 6 * p.m2 - 8) +
         3 * p.n * p.A;
}

long long t_corona_bipartite_upper(const CoronaParams& p) {
  return 2 * p.G.LxiC + (3 * p.n1 + p.n2) * p.G.xiC + 2 * p.G.M1 +
         p.A * p.G.theta + p.L.LxiC + (2 * p.n2 + 1) * p.L.xiC + 2 * p.L.M1 +
         p.B * p.L.theta + 10 * p.n2 * p.ell +
         p.m * (14 * p.n1 + 3 * p.n2 * p.n2 + 5 * p.n2 - 6 * p.m2 - 4) +
         2 * p.n * p.A;
}

// ---------------------------------------------------------------------------
// applicability predicates

bool conn_g(const Gs& in) { return is_connected(*in[0]); }
bool conn_g_n2(const Gs& in) {
  return in[0]->vertex_count() >= 2 && is_connected(*in[0]);
}
bool conn_c3c4(const Gs& in) { return is_connected(*in[0]) && is_c3_c4_free(*in[0]); }
bool conn_bip(const Gs& in) { return is_connected(*in[0]) && is_bipartite(*in[0]); }
bool conn_bip_pendant(const Gs& in) {
  return conn_bip(in) && pendant_ecc_property(*in[0]);
}
bool conn_c3c4_bip(const Gs& in) { return conn_c3c4(in) && is_bipartite(*in[0]); }
bool conn_c3c4_bip_pendant(const Gs& in) {
  return conn_c3c4_bip(in) && pendant_ecc_property(*in[0]);
}

bool join_base(const Gs& in) {
  return connected_all(in) && in[0]->vertex_count() >= 3;
}
bool join_star(const Gs& in) { return join_base(in) && is_star(*in[0]); }
bool join_nonstar(const Gs& in) { return join_base(in) && !is_star(*in[0]); }
bool join_nonstar_pendant(const Gs& in) {
  return join_nonstar(in) && pendant_ecc_property(*in[0]);
}
bool join_constructible(const Gs& in) {
  return connected_all(in) && in[0]->vertex_count() >= 2;
}

bool corona_base(const Gs& in) {
  return is_connected(*in[0]) && in[1]->vertex_count() >= 1 &&
         in[2]->vertex_count() >= 1;
}
bool corona_n2(const Gs& in) {
  return corona_base(in) && in[0]->vertex_count() >= 2;
}
bool corona_c3c4(const Gs& in) { return corona_base(in) && is_c3_c4_free(*in[0]); }
bool corona_bip(const Gs& in) { return corona_base(in) && is_bipartite(*in[0]); }
bool corona_bip_pendant(const Gs& in) {
  return corona_bip(in) && pendant_ecc_property(*in[0]);
}
bool corona_c3c4_bip(const Gs& in) {
  return corona_c3c4(in) && is_bipartite(*in[0]);
}
bool corona_c3c4_bip_pendant(const Gs& in) {
  return corona_c3c4_bip(in) && pendant_ecc_property(*in[0]);
}

// ---------------------------------------------------------------------------

std::vector<Claim> build_registry() {
  std::vector<Claim> reg;
  auto add = [&](Claim c) { reg.push_back(std::move(c)); };

  // ---- section 2 ----
  add({"lem-2.1.i", StatementKind::Sandwich, 1,
       "2e(v|G) <= e(v|S(G)) <= 2e(v|G)+1 for every v in V(G)", "", conn_g,
       [](const Gs& in) {
         return check_ecc_sandwich(*in[0], DerivedKind::Subdivision, false, 2, 0, 1);
       }});
  add({"lem-2.1.ii", StatementKind::Sandwich, 1,
       "2e(e|L(G)) <= e(e|S(G)) <= 2e(e|L(G))+1 for every e in E(G)", "",
       conn_g,
       [](const Gs& in) {
         return check_ecc_sandwich(*in[0], DerivedKind::Subdivision, true, 2, 0, 1);
       }});
  add({"lem-2.1.bip", StatementKind::CaseTable, 1,
       "e(v|S(G)) = 2e(v|G) when G is bipartite",
       "sharpening stated in the surrounding text, not numbered", conn_bip,
       [](const Gs& in) {
         return check_ecc_equality(*in[0], DerivedKind::Subdivision, false, 2, 0);
       }});
  add({"lem-2.2", StatementKind::CaseTable, 1,
       "distance relations between S/Q/R/T and G resp. L(G)",
       "checked for distinct pairs only; the +1 forms fail at distance 0",
       conn_g, [](const Gs& in) { return check_lem_2_2(*in[0]); }});
  add({"lem-2.3", StatementKind::UpperBound, 1,
       "sum_v d2(v) <= M1 - 2m, equality iff G is {C3,C4}-free", "", conn_g,
       [](const Gs& in) { return check_lem_2_3(*in[0]); }});
  add({"lem-2.4.i", StatementKind::CaseTable, 1, "d2(v|S(G)) = d1(v|G)", "",
       conn_g, [](const Gs& in) { return check_lem_2_4(*in[0], false); }});
  add({"lem-2.4.ii", StatementKind::CaseTable, 1, "d2(e|S(G)) = d1(e|L(G))", "",
       conn_g, [](const Gs& in) { return check_lem_2_4(*in[0], true); }});
  add({"thm-2.5", StatementKind::Sandwich, 1,
       "2xi(G)+2xi(L) <= Lxi(S(G)) <= 2xi(G)+2m+2xi(L)+2|E(L)|", "", conn_g,
       [](const Gs& in) {
         auto b = base_invariants(*in[0]);
         long long lo = 2 * b.G.xiC + 2 * b.L.xiC;
         return aggregate_sandwich(lxi_of(DerivedKind::Subdivision, *in[0]), lo,
                                   lo + 2 * b.G.m + 2 * b.L.m);
       }});
  add({"cor-2.6", StatementKind::Sandwich, 1,
       "bipartite G: 2xi(G)+2xi(L) <= Lxi(S(G)) <= 2xi(G)+2xi(L)+2|E(L)|", "",
       conn_bip,
       [](const Gs& in) {
         auto b = base_invariants(*in[0]);
         long long lo = 2 * b.G.xiC + 2 * b.L.xiC;
         return aggregate_sandwich(lxi_of(DerivedKind::Subdivision, *in[0]), lo,
                                   lo + 2 * b.L.m);
       }});
  add({"cor-2.7", StatementKind::Equality, 1,
       "bipartite + pendant-eccentricity G: Lxi(S(G)) = 2xi(G)+2xi(L)+2|E(L)|",
       "", conn_bip_pendant,
       [](const Gs& in) {
         auto b = base_invariants(*in[0]);
         return aggregate_equality(lxi_of(DerivedKind::Subdivision, *in[0]),
                                   2 * b.G.xiC + 2 * b.L.xiC + 2 * b.L.m);
       }});
  add({"lem-2.8.i", StatementKind::CaseTable, 1, "e(v|Q(G)) = e(v|G)+1",
       "needs n >= 2; Q(K1) = K1 makes the +1 false on a single vertex",
       conn_g_n2,
       [](const Gs& in) {
         return check_ecc_equality(*in[0], DerivedKind::Q, false, 1, 1);
       }});
  add({"lem-2.8.ii", StatementKind::Sandwich, 1,
       "e(e|L(G)) <= e(e|Q(G)) <= e(e|L(G))+1", "", conn_g,
       [](const Gs& in) {
         return check_ecc_sandwich(*in[0], DerivedKind::Q, true, 1, 0, 1);
       }});
  add({"lem-2.9.i", StatementKind::LowerBound, 1,
       "d2(v|Q(G)) >= d1(v|G)+d2(v|G), equality iff {C3,C4}-free", "", conn_g,
       [](const Gs& in) {
         return check_d2_conditional(*in[0], DerivedKind::Q, false, true,
                                     is_c3_c4_free(*in[0]),
                                     claimed_q_vertex(*in[0]));
       }});
  add({"lem-2.9.ii", StatementKind::UpperBound, 1,
       "d2(e|Q(G)) <= d1(e|L)+d2(e|L), equality iff C3-free", "", conn_g,
       [](const Gs& in) {
         return check_d2_conditional(*in[0], DerivedKind::Q, true, false,
                                     is_triangle_free(*in[0]),
                                     claimed_line_sum(*in[0]));
       }});
  add({"thm-2.10", StatementKind::Sandwich, 1,
       "{C3,C4}-free G: xi+Lxi+M1+xi(L)+Lxi(L) <= Lxi(Q(G)) <= ... + M1(L)", "",
       conn_c3c4,
       [](const Gs& in) {
         auto b = base_invariants(*in[0]);
         long long lo = b.G.xiC + b.G.LxiC + b.G.M1 + b.L.xiC + b.L.LxiC;
         return aggregate_sandwich(lxi_of(DerivedKind::Q, *in[0]), lo,
                                   lo + b.L.M1);
       }});
  add({"cor-2.11", StatementKind::Equality, 1,
       "{C3,C4}-free bipartite pendant-eccentricity G: Lxi(Q(G)) equals the "
       "upper bound of thm-2.10",
       "derivation substitutes sum d2(e|L) = M1(L)-2|E(L)|, which needs L(G) "
       "{C3,C4}-free; expected to fail when G has a vertex of degree >= 3",
       conn_c3c4_bip_pendant,
       [](const Gs& in) {
         auto b = base_invariants(*in[0]);
         return aggregate_equality(
             lxi_of(DerivedKind::Q, *in[0]),
             b.G.xiC + b.G.LxiC + b.G.M1 + b.L.xiC + b.L.LxiC + b.L.M1);
       }});
  add({"lem-2.12.i", StatementKind::Sandwich, 1,
       "e(v|G) <= e(v|R(G)) <= e(v|G)+1", "", conn_g,
       [](const Gs& in) {
         return check_ecc_sandwich(*in[0], DerivedKind::R, false, 1, 0, 1);
       }});
  add({"lem-2.12.ii", StatementKind::CaseTable, 1, "e(e|R(G)) = e(e|L(G))+1",
       "", conn_g,
       [](const Gs& in) {
         return check_ecc_equality(*in[0], DerivedKind::R, true, 1, 1);
       }});
  add({"lem-2.13.i", StatementKind::LowerBound, 1,
       "d2(v|R(G)) >= 2 d2(v|G), equality iff {C3,C4}-free", "", conn_g,
       [](const Gs& in) {
         return check_d2_conditional(*in[0], DerivedKind::R, false, true,
                                     is_c3_c4_free(*in[0]),
                                     claimed_twice_d2(*in[0]));
       }});
  add({"lem-2.13.ii", StatementKind::UpperBound, 1,
       "d2(e|R(G)) <= 2 d1(e|L), equality iff C3-free", "", conn_g,
       [](const Gs& in) {
         return check_d2_conditional(*in[0], DerivedKind::R, true, false,
                                     is_triangle_free(*in[0]),
                                     claimed_twice_line_degree(*in[0]));
       }});
  add({"thm-2.14", StatementKind::Sandwich, 1,
       "{C3,C4}-free G: 2Lxi+2xi(L)+4|E(L)| <= Lxi(R(G)) <= "
       "2Lxi+2M1-4m+2xi(L)+4|E(L)|",
       "", conn_c3c4,
       [](const Gs& in) {
         auto b = base_invariants(*in[0]);
         long long lo = 2 * b.G.LxiC + 2 * b.L.xiC + 4 * b.L.m;
         long long hi =
             2 * b.G.LxiC + 2 * b.G.M1 - 4 * b.G.m + 2 * b.L.xiC + 4 * b.L.m;
         return aggregate_sandwich(lxi_of(DerivedKind::R, *in[0]), lo, hi);
       }});
  add({"cor-2.15", StatementKind::Equality, 1,
       "{C3,C4}-free bipartite G: Lxi(R(G)) = 2Lxi+2xi(L)+4|E(L)|", "",
       conn_c3c4_bip,
       [](const Gs& in) {
         auto b = base_invariants(*in[0]);
         return aggregate_equality(lxi_of(DerivedKind::R, *in[0]),
                                   2 * b.G.LxiC + 2 * b.L.xiC + 4 * b.L.m);
       }});
  add({"lem-2.16.i", StatementKind::Sandwich, 1,
       "e(v|G) <= e(v|T(G)) <= e(v|G)+1", "", conn_g,
       [](const Gs& in) {
         return check_ecc_sandwich(*in[0], DerivedKind::Total, false, 1, 0, 1);
       }});
  add({"lem-2.16.ii", StatementKind::Sandwich, 1,
       "e(e|L(G)) <= e(e|T(G)) <= e(e|L(G))+1", "", conn_g,
       [](const Gs& in) {
         return check_ecc_sandwich(*in[0], DerivedKind::Total, true, 1, 0, 1);
       }});
  add({"lem-2.17.i", StatementKind::LowerBound, 1,
       "d2(v|T(G)) >= 2 d2(v|G), equality iff {C3,C4}-free", "", conn_g,
       [](const Gs& in) {
         return check_d2_conditional(*in[0], DerivedKind::Total, false, true,
                                     is_c3_c4_free(*in[0]),
                                     claimed_twice_d2(*in[0]));
       }});
  add({"lem-2.17.ii", StatementKind::UpperBound, 1,
       "d2(e|T(G)) <= d1(e|L)+d2(e|L), equality iff C3-free", "", conn_g,
       [](const Gs& in) {
         return check_d2_conditional(*in[0], DerivedKind::Total, true, false,
                                     is_triangle_free(*in[0]),
                                     claimed_line_sum(*in[0]));
       }});
  add({"thm-2.18", StatementKind::Sandwich, 1,
       "{C3,C4}-free G: 2Lxi+xi(L)+Lxi(L) <= Lxi(T(G)) <= "
       "2Lxi+2M1-4m+xi(L)+Lxi(L)+M1(L)",
       "the displayed proof has a doubled '+'; the single-plus statement is "
       "what is encoded",
       conn_c3c4,
       [](const Gs& in) {
         auto b = base_invariants(*in[0]);
         long long lo = 2 * b.G.LxiC + b.L.xiC + b.L.LxiC;
         long long hi = 2 * b.G.LxiC + 2 * b.G.M1 - 4 * b.G.m + b.L.xiC +
                        b.L.LxiC + b.L.M1;
         return aggregate_sandwich(lxi_of(DerivedKind::Total, *in[0]), lo, hi);
       }});
  add({"cor-2.19", StatementKind::Sandwich, 1,
       "{C3,C4}-free bipartite G: 2Lxi+xi(L)+Lxi(L) <= Lxi(T(G)) <= "
       "2Lxi+xi(L)+Lxi(L)+M1(L)",
       "", conn_c3c4_bip,
       [](const Gs& in) {
         auto b = base_invariants(*in[0]);
         long long lo = 2 * b.G.LxiC + b.L.xiC + b.L.LxiC;
         return aggregate_sandwich(lxi_of(DerivedKind::Total, *in[0]), lo,
                                   lo + b.L.M1);
       }});
  add({"cor-2.20", StatementKind::Equality, 1,
       "{C3,C4}-free bipartite pendant-eccentricity G: Lxi(T(G)) = "
       "2Lxi+xi(L)+Lxi(L)+M1(L)",
       "same M1(L) substitution as cor-2.11; expected to fail when G has a "
       "vertex of degree >= 3",
       conn_c3c4_bip_pendant,
       [](const Gs& in) {
         auto b = base_invariants(*in[0]);
         return aggregate_equality(
             lxi_of(DerivedKind::Total, *in[0]),
             2 * b.G.LxiC + b.L.xiC + b.L.LxiC + b.L.M1);
       }});

  // ---- section 3 ----
  add({"lem-3.2.i", StatementKind::CaseTable, 2,
       "star G: eccentricities in the subdivision vertex join are 2 (center), "
       "3 (leaves), 3 (edge vertices), 2 (H)",
       "the '2 or 3' case is encoded with the center getting 2", join_star,
       [](const Gs& in) {
         return check_join_star_ecc(JoinKind::Vertex, in, 2, 3, 3, 2);
       }});
  add({"lem-3.2.ii", StatementKind::Sandwich, 2,
       "non-star G: vertex join eccentricities are 3 (originals), 3..4 (edge "
       "vertices), 2 (H)",
       "attainment of 4 is recorded in the result note", join_nonstar,
       check_lem_3_2_ii});
  add({"lem-3.2.iii", StatementKind::CaseTable, 2,
       "vertex join second degrees: n-1 / d1(e|L)+n1 / n1-1-d1(v|H)+m", "",
       join_base, check_lem_3_2_iii});
  add({"thm-3.3", StatementKind::Equality, 2,
       "star G: Lxi(G vdot H) = (3n-1)(n-1)+(3n+2n1-3)(n+n1-2)-4m1", "",
       join_star,
       [](const Gs& in) {
         auto p = join_params(in);
         long long rhs = (3 * p.n - 1) * (p.n - 1) +
                         (3 * p.n + 2 * p.n1 - 3) * (p.n + p.n1 - 2) -
                         4 * p.m1;
         return aggregate_equality(
             leap_ecc_connectivity(sd_vertex_join(*in[0], *in[1]).graph), rhs);
       }});
  add({"thm-3.4", StatementKind::Sandwich, 2,
       "non-star G: 3n(n-1)+6|E(L)|+(2n1+5m-2)n1-4m1 <= Lxi(G vdot H) <= "
       "3n(n-1)+8|E(L)|+2(n1+3m-1)n1-4m1",
       "", join_nonstar,
       [](const Gs& in) {
         auto p = join_params(in);
         long long lo = 3 * p.n * (p.n - 1) + 6 * p.ell +
                        (2 * p.n1 + 5 * p.m - 2) * p.n1 - 4 * p.m1;
         long long hi = 3 * p.n * (p.n - 1) + 8 * p.ell +
                        2 * (p.n1 + 3 * p.m - 1) * p.n1 - 4 * p.m1;
         return aggregate_sandwich(
             leap_ecc_connectivity(sd_vertex_join(*in[0], *in[1]).graph), lo, hi);
       }});
  add({"cor-3.5", StatementKind::Equality, 2,
       "non-star pendant-eccentricity G: Lxi(G vdot H) equals the lower bound "
       "of thm-3.4",
       "premise 'pendant property forces edge-class eccentricity 3' is wrong "
       "whenever G has two disjoint edges; expected to fail (e.g. G = P4)",
       join_nonstar_pendant,
       [](const Gs& in) {
         auto p = join_params(in);
         long long rhs = 3 * p.n * (p.n - 1) + 6 * p.ell +
                         (2 * p.n1 + 5 * p.m - 2) * p.n1 - 4 * p.m1;
         return aggregate_equality(
             leap_ecc_connectivity(sd_vertex_join(*in[0], *in[1]).graph), rhs);
       }});
  add({"lem-3.7.i", StatementKind::CaseTable, 2,
       "star G: eccentricities in the subdivision edge join are 2 (center), 4 "
       "(leaves), 3 (edge vertices), 2 (H)",
       "the '2 or 4' case is encoded with the center getting 2", join_star,
       check_lem_3_7_i});
  add({"lem-3.7.ii", StatementKind::CaseTable, 2,
       "non-star G: edge join eccentricities are 3 for full vertices, 4 for "
       "other originals, 3 (edge vertices), 2 (H)",
       "", join_nonstar, check_lem_3_7_ii});
  add({"lem-3.7.iii", StatementKind::CaseTable, 2,
       "edge join second degrees: d1(v|G)+n1 / m-1 / n1-1-d1(v|H)+n", "",
       join_base, check_lem_3_7_iii});
  add({"thm-3.8", StatementKind::Equality, 2,
       "star G: Lxi(G vee H) = (3n+4n1-2)(n-1)+2(n+n1-1)(n1+1)-4m1", "",
       join_star,
       [](const Gs& in) {
         auto p = join_params(in);
         long long rhs = (3 * p.n + 4 * p.n1 - 2) * (p.n - 1) +
                         2 * (p.n + p.n1 - 1) * (p.n1 + 1) - 4 * p.m1;
         return aggregate_equality(
             leap_ecc_connectivity(sd_edge_join(*in[0], *in[1]).graph), rhs);
       }});
  add({"thm-3.9", StatementKind::Equality, 2,
       "non-star G: Lxi(G vee H) = m(3m+5)+2n1(n1+3n-1)-4m1-(n+n1-1)|Ve1(G)|",
       "", join_nonstar,
       [](const Gs& in) {
         auto p = join_params(in);
         long long rhs = p.m * (3 * p.m + 5) +
                         2 * p.n1 * (p.n1 + 3 * p.n - 1) - 4 * p.m1 -
                         (p.n + p.n1 - 1) * p.full;
         return aggregate_equality(
             leap_ecc_connectivity(sd_edge_join(*in[0], *in[1]).graph), rhs);
       }});
  add({"rem-3.10-counts", StatementKind::Equality, 3,
       "vertex-edge join has n+m+n1+n2 vertices and 2m+nn1+mn2+m1+m2 edges", "",
       join_constructible,
       [](const Gs& in) {
         auto j = sd_vertex_edge_join(*in[0], *in[1], *in[2]);
         Table t;
         t.eq(j.graph.vertex_count(), j.n + j.m + j.n1 + j.n2, "vertex count");
         t.eq(j.graph.edge_count(),
              2LL * j.m + static_cast<long long>(j.n) * j.n1 +
                  static_cast<long long>(j.m) * j.n2 + j.m1 + j.m2,
              "edge count");
         return table_result(t);
       }});
  add({"lem-3.11.i", StatementKind::CaseTable, 3,
       "star G: vertex-edge join eccentricities are 2 (center) and 3 "
       "elsewhere",
       "the '2 or 3' case is encoded with the center getting 2", join_star,
       [](const Gs& in) {
         return check_join_star_ecc(JoinKind::VertexEdge, in, 2, 3, 3, 3);
       }});
  add({"lem-3.11.ii", StatementKind::CaseTable, 3,
       "non-star G: every vertex of the vertex-edge join has eccentricity 3",
       "", join_nonstar, check_lem_3_11_ii});
  add({"lem-3.11.iii", StatementKind::CaseTable, 3,
       "vertex-edge join second degrees: n-1+n2 / m-1+n1 / n1-1-d1+m / "
       "n2-1-d1+n",
       "", join_base, check_lem_3_11_iii});
  add({"thm-3.12", StatementKind::Equality, 3,
       "star G: Lxi = 3(n+n1-2)(n+n1-1)+(n+n2-1)(3n+3n2-1)-6(m1+m2)", "",
       join_star,
       [](const Gs& in) {
         auto p = join_params(in);
         long long rhs = 3 * (p.n + p.n1 - 2) * (p.n + p.n1 - 1) +
                         (p.n + p.n2 - 1) * (3 * p.n + 3 * p.n2 - 1) -
                         6 * (p.m1 + p.m2);
         return aggregate_equality(
             leap_ecc_connectivity(
                 sd_vertex_edge_join(*in[0], *in[1], *in[2]).graph),
             rhs);
       }});
  add({"thm-3.13", StatementKind::Equality, 3,
       "non-star G: Lxi = 3(n+n2-1)(n+n2)+3(m+n1-1)(m+n1)-6(m1+m2)", "",
       join_nonstar,
       [](const Gs& in) {
         auto p = join_params(in);
         long long rhs = 3 * (p.n + p.n2 - 1) * (p.n + p.n2) +
                         3 * (p.m + p.n1 - 1) * (p.m + p.n1) -
                         6 * (p.m1 + p.m2);
         return aggregate_equality(
             leap_ecc_connectivity(
                 sd_vertex_edge_join(*in[0], *in[1], *in[2]).graph),
             rhs);
       }});

  // ---- section 4 ----
  add({"lem-4.1", StatementKind::CaseTable, 1,
       "d1 by class in S/Q/R/T: d1 or 2 / d1 or 2+d1(e|L) / 2d1 or 2 / 2d1 or "
       "2+d1(e|L)",
       "", conn_g,
       [](const Gs& in) {
         const Graph& g = *in[0];
         Table t;
         auto check_kind = [&](DerivedKind k, bool doubled, bool line_term) {
           auto d = derive(k, g);
           for (int v = 0; v < g.vertex_count(); ++v)
             t.eq(d.graph.degree(d.original_index(v)),
                  (doubled ? 2LL : 1LL) * g.degree(v),
                  derived_kind_name(k) + " v=" + std::to_string(v));
           for (int j = 0; j < g.edge_count(); ++j)
             t.eq(d.graph.degree(d.edge_vertex_index(j)),
                  2 + (line_term ? line_degree(g, j) : 0),
                  derived_kind_name(k) + " e=" + std::to_string(j));
         };
         check_kind(DerivedKind::Subdivision, false, false);
         check_kind(DerivedKind::Q, false, true);
         check_kind(DerivedKind::R, true, false);
         check_kind(DerivedKind::Total, true, true);
         return table_result(t);
       }});

  struct CoronaSpec {
    DerivedKind kind;
    const char* ecc_id;
    const char* d2_id;
  };
  const CoronaSpec corona_lemmas[] = {
      {DerivedKind::Subdivision, "lem-4.3.i", "lem-4.3.ii"},
      {DerivedKind::Q, "lem-4.8.i", "lem-4.8.ii"},
      {DerivedKind::R, "lem-4.12.i", "lem-4.12.ii"},
      {DerivedKind::Total, "lem-4.16.i", "lem-4.16.ii"},
  };
  for (auto spec : corona_lemmas) {
    DerivedKind k = spec.kind;
    add({spec.ecc_id, StatementKind::CaseTable, 3,
         "double corona over " + derived_kind_name(k) +
             ": eccentricity is the anchor eccentricity +1 (base side) or +2 "
             "(copy side)",
         "needs n >= 2: for G=K1 an H1 apex vertex breaks the +2 row",
         corona_n2,
         [k](const Gs& in) { return check_corona_ecc(k, in); }});
    add({spec.d2_id, StatementKind::CaseTable, 3,
         "double corona over " + derived_kind_name(k) +
             ": claimed d2 per provenance class matches BFS",
         "", corona_base,
         [k](const Gs& in) { return check_corona_d2(k, in); }});
  }

  add({"thm-4.4", StatementKind::Sandwich, 3,
       "S-corona bounds in xi, theta, xi(L), theta(L), |E(L)| and the H "
       "parameters",
       "", corona_base,
       [](const Gs& in) {
         auto p = corona_params(in);
         return aggregate_sandwich(corona_lxi(DerivedKind::Subdivision, in),
                                   s_corona_lower(p), s_corona_upper(p));
       }});
  add({"cor-4.5", StatementKind::Sandwich, 3,
       "bipartite G: S-corona bounds with the sharpened upper bound", "",
       corona_bip,
       [](const Gs& in) {
         auto p = corona_params(in);
         return aggregate_sandwich(corona_lxi(DerivedKind::Subdivision, in),
                                   s_corona_lower(p),
                                   s_corona_bipartite_upper(p));
       }});
  add({"cor-4.6", StatementKind::Equality, 3,
       "bipartite pendant-eccentricity G: S-corona equals the sharpened upper "
       "bound",
       "", corona_bip_pendant,
       [](const Gs& in) {
         auto p = corona_params(in);
         return aggregate_equality(corona_lxi(DerivedKind::Subdivision, in),
                                   s_corona_bipartite_upper(p));
       }});
  add({"thm-4.9", StatementKind::Sandwich, 3,
       "{C3,C4}-free G: Q-corona bounds", "", corona_c3c4,
       [](const Gs& in) {
         auto p = corona_params(in);
         return aggregate_sandwich(corona_lxi(DerivedKind::Q, in),
                                   q_corona_lower(p), q_corona_upper(p));
       }});
  add({"cor-4.10", StatementKind::Equality, 3,
       "{C3,C4}-free bipartite pendant-eccentricity G: Q-corona equals the "
       "upper bound of thm-4.9",
       "inherits the M1(L) substitution of cor-2.11; expected to fail when G "
       "has a vertex of degree >= 3",
       corona_c3c4_bip_pendant,
       [](const Gs& in) {
         auto p = corona_params(in);
         return aggregate_equality(corona_lxi(DerivedKind::Q, in),
                                   q_corona_upper(p));
       }});
  add({"thm-4.13", StatementKind::Sandwich, 3,
       "{C3,C4}-free G: R-corona bounds", "", corona_c3c4,
       [](const Gs& in) {
         auto p = corona_params(in);
         return aggregate_sandwich(corona_lxi(DerivedKind::R, in),
                                   r_corona_lower(p), r_corona_upper(p));
       }});
  add({"cor-4.14", StatementKind::Equality, 3,
       "{C3,C4}-free bipartite G: R-corona equals the lower bound of thm-4.13",
       "", corona_c3c4_bip,
       [](const Gs& in) {
         auto p = corona_params(in);
         return aggregate_equality(corona_lxi(DerivedKind::R, in),
                                   r_corona_lower(p));
       }});
  add({"thm-4.17", StatementKind::Sandwich, 3,
       "{C3,C4}-free G: T-corona bounds", "", corona_c3c4,
       [](const Gs& in) {
         auto p = corona_params(in);
         return aggregate_sandwich(corona_lxi(DerivedKind::Total, in),
                                   t_corona_lower(p), t_corona_upper(p));
       }});
  add({"cor-4.18", StatementKind::Sandwich, 3,
       "{C3,C4}-free bipartite G: T-corona bounds with the sharpened upper "
       "bound",
       "", corona_c3c4_bip,
       [](const Gs& in) {
         auto p = corona_params(in);
         return aggregate_sandwich(corona_lxi(DerivedKind::Total, in),
                                   t_corona_lower(p),
                                   t_corona_bipartite_upper(p));
       }});
  add({"cor-4.19", StatementKind::Equality, 3,
       "{C3,C4}-free bipartite pendant-eccentricity G: T-corona equals the "
       "sharpened upper bound",
       "inherits the M1(L) substitution of cor-2.20; expected to fail when G "
       "has a vertex of degree >= 3",
       corona_c3c4_bip_pendant,
       [](const Gs& in) {
         auto p = corona_params(in);
         return aggregate_equality(corona_lxi(DerivedKind::Total, in),
                                   t_corona_bipartite_upper(p));
       }});

  return reg;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> reg = build_registry();
  return reg;
}

const Claim* find_claim(const std::string& id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<std::string> resolve_claim_ids(
    const std::vector<std::string>& patterns) {
  std::vector<std::string> out;
  auto push_unique = [&](const std::string& id) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  };
  for (const auto& p : patterns) {
    if (p == "all") {
      for (const auto& c : claim_registry()) push_unique(c.id);
      continue;
    }
    if (!p.empty() && p.back() == '*') {
      std::string prefix = p.substr(0, p.size() - 1);
      bool any = false;
      for (const auto& c : claim_registry())
        if (c.id.rfind(prefix, 0) == 0) {
          push_unique(c.id);
          any = true;
        }
      if (!any) throw UnknownClaim("no claim matches pattern: " + p);
      continue;
    }
    if (!find_claim(p)) throw UnknownClaim("unknown claim id: " + p);
    push_unique(p);
  }
  return out;
}

ClaimResult check_claim(const std::string& claim_id,
                        const std::vector<const Graph*>& instance) {
  const Claim* c = find_claim(claim_id);
  if (!c) throw UnknownClaim("unknown claim id: " + claim_id);
  if (static_cast<int>(instance.size()) != c->arity)
    throw ArityMismatch("claim " + claim_id + " expects " +
                        std::to_string(c->arity) + " graph(s), got " +
                        std::to_string(instance.size()));
  ClaimResult r;
  if (!c->applicable(instance)) {
    r.status = ClaimStatus::NotApplicable;
  } else {
    r = c->check(instance);
  }
  r.claim_id = claim_id;
  r.instance = describe_instance(instance);
  return r;
}

ClaimResult check_claim(const std::string& claim_id,
                        const std::vector<Graph>& instance) {
  std::vector<const Graph*> ptrs;
  ptrs.reserve(instance.size());
  for (const auto& g : instance) ptrs.push_back(&g);
  return check_claim(claim_id, ptrs);
}

}  // namespace leapx
