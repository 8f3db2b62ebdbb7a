#include "leapx/invariants.hpp"

namespace leapx {
namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g))
    throw DisconnectedGraph("index functional on a disconnected graph");
}

}  // namespace

long long first_zagreb(const Graph& g) {
  long long m1 = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    long long d = g.degree(v);
    m1 += d * d;
  }
  return m1;
}

long long first_leap_zagreb(const Graph& g) {
  require_connected(g);
  long long lm1 = 0;
  for (int d2 : second_degrees(g)) lm1 += static_cast<long long>(d2) * d2;
  return lm1;
}

long long eccentricity_sum(const Graph& g) {
  require_connected(g);
  long long theta = 0;
  for (int e : eccentricities(g).ecc) theta += e;
  return theta;
}

long long ecc_connectivity(const Graph& g) {
  require_connected(g);
  auto prof = eccentricities(g);
  long long xi = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    xi += static_cast<long long>(g.degree(v)) * prof.ecc[v];
  return xi;
}

long long leap_ecc_connectivity(const Graph& g) {
  require_connected(g);
  auto prof = eccentricities(g);
  auto d2 = second_degrees(g);
  long long lxi = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    lxi += static_cast<long long>(d2[v]) * prof.ecc[v];
  return lxi;
}

IndexReport index_report(const Graph& g) {
  require_connected(g);
  IndexReport r;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.M1 = first_zagreb(g);
  auto prof = eccentricities(g);
  auto d2 = second_degrees(g);
  for (int v = 0; v < g.vertex_count(); ++v) {
    long long dd = d2[v];
    r.LM1 += dd * dd;
    r.theta += prof.ecc[v];
    r.xiC += static_cast<long long>(g.degree(v)) * prof.ecc[v];
    r.LxiC += dd * prof.ecc[v];
    r.sum_d2 += dd;
  }
  return r;
}

}  // namespace leapx
