#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leapx/coronas.hpp"
#include "leapx/invariants.hpp"
#include "oracles.hpp"

using namespace leapx;

TEST_CASE("smallest corona fixtures") {
  auto c = double_corona(DerivedKind::Subdivision, Graph::complete(2),
                         Graph::complete(1), Graph::complete(1));
  CHECK(c.graph.vertex_count() == 6);  // n(n1+1) + m(n2+1) = 4 + 2

  // a K1 base degenerates to K2
  auto tiny = double_corona(DerivedKind::Subdivision, Graph::complete(1),
                            Graph::complete(1), Graph::complete(1));
  CHECK(oracle::isomorphic(tiny.graph, Graph::complete(2)));
}

TEST_CASE("vertex count formula over kinds and samples") {
  std::vector<Graph> gs{Graph::path(3), Graph::cycle(4), Graph::star(4)};
  std::vector<Graph> hs{Graph::complete(1), Graph::complete(2), Graph::path(3)};
  for (auto kind : {DerivedKind::Subdivision, DerivedKind::Q, DerivedKind::R,
                    DerivedKind::Total})
    for (const auto& g : gs)
      for (const auto& h1 : hs)
        for (const auto& h2 : hs) {
          auto c = double_corona(kind, g, h1, h2);
          long long n = g.vertex_count(), m = g.edge_count();
          CHECK(c.graph.vertex_count() ==
                n * (h1.vertex_count() + 1) + m * (h2.vertex_count() + 1));
        }
}

TEST_CASE("copy i is completely joined to anchor i and nothing else") {
  auto g = Graph::path(3);
  auto h1 = Graph::complete(2);
  auto h2 = Graph::path(3);
  auto c = double_corona(DerivedKind::Q, g, h1, h2);
  for (int i = 0; i < c.n; ++i)
    for (int u = 0; u < c.n1; ++u) {
      CHECK(c.graph.has_edge(c.g_original_index(i), c.h1_copy_index(i, u)));
      for (int other = 0; other < c.n; ++other)
        if (other != i)
          CHECK_FALSE(
              c.graph.has_edge(c.g_original_index(other), c.h1_copy_index(i, u)));
    }
  for (int j = 0; j < c.m; ++j)
    for (int u = 0; u < c.n2; ++u)
      CHECK(c.graph.has_edge(c.g_edge_index(j), c.h2_copy_index(j, u)));
  // copies carry H's own edges
  CHECK(c.graph.has_edge(c.h1_copy_index(1, 0), c.h1_copy_index(1, 1)));
  CHECK(c.graph.has_edge(c.h2_copy_index(0, 0), c.h2_copy_index(0, 1)));
  CHECK_FALSE(c.graph.has_edge(c.h2_copy_index(0, 0), c.h2_copy_index(0, 2)));

  CHECK(c.provenance(c.h1_copy_index(1, 0)).kind == Provenance::Kind::H1);
  CHECK(c.provenance(c.h1_copy_index(1, 0)).copy == 1);
  CHECK(c.provenance(c.h2_copy_index(1, 2)).index == 2);
}

TEST_CASE("S-corona of P4 with K1 pendants: both routes give 198") {
  auto g = Graph::path(4);
  auto k1 = Graph::complete(1);
  auto c = double_corona(DerivedKind::Subdivision, g, k1, k1);

  long long direct = leap_ecc_connectivity(c.graph);
  CHECK(direct == oracle::leap_ecc_connectivity(c.graph));
  CHECK(direct == 198);

  // the bipartite + pendant-eccentricity closed form, assembled from base
  // invariants, must coincide on this instance
  auto G = index_report(g);
  auto L = index_report(line_graph(g).graph);
  long long n = G.n, m = G.m, n1 = 1, m1 = 0, n2 = 1, m2 = 0;
  long long A = n1 * n1 - n1 - 2 * m1;
  long long B = 2 * n1 + n2 * n2 + n2 - 2 * m2;
  long long rhs = 2 * (n1 + n2 + 1) * G.xiC + 2 * A * G.theta + 2 * L.xiC +
                  2 * B * L.theta + 4 * L.m +
                  m * (8 * n1 + 3 * n2 * n2 + 5 * n2 - 6 * m2 + 2) + 2 * n * A;
  CHECK(rhs == 198);
  CHECK(direct == rhs);
}

TEST_CASE("eccentricity split per anchor on the S-corona of P4") {
  auto g = Graph::path(4);
  auto k1 = Graph::complete(1);
  auto c = double_corona(DerivedKind::Subdivision, g, k1, k1);
  auto prof = eccentricities(c.graph);
  auto base_prof = eccentricities(c.base.graph);

  for (int v = 0; v < c.n + c.m; ++v)
    CHECK(prof.ecc[v] == base_prof.ecc[v] + 1);
  for (int i = 0; i < c.n; ++i)
    CHECK(prof.ecc[c.h1_copy_index(i, 0)] ==
          base_prof.ecc[c.g_original_index(i)] + 2);
  for (int j = 0; j < c.m; ++j)
    CHECK(prof.ecc[c.h2_copy_index(j, 0)] ==
          base_prof.ecc[c.g_edge_index(j)] + 2);

  auto table = corona_ecc_table(c);
  for (int v = 0; v < c.graph.vertex_count(); ++v)
    CHECK(table[v] == prof.ecc[v]);
}

TEST_CASE("claimed d2 tables match BFS on mixed instances") {
  auto g = Graph::path(4);
  auto h1 = Graph::complete(2);
  auto h2 = Graph::path(3);
  for (auto kind : {DerivedKind::Subdivision, DerivedKind::Q, DerivedKind::R,
                    DerivedKind::Total}) {
    auto c = double_corona(kind, g, h1, h2);
    auto claimed = corona_d2_table(c, g, h1, h2);
    auto actual = second_degrees(c.graph);
    for (int v = 0; v < c.graph.vertex_count(); ++v)
      REQUIRE(claimed[v] == actual[v]);
  }
}

TEST_CASE("the three table rows spelled out") {
  auto g = Graph::path(4);
  auto h1 = Graph::complete(2);
  auto h2 = Graph::path(3);
  long long n1 = 2, n2 = 3;

  auto cs = double_corona(DerivedKind::Subdivision, g, h1, h2);
  auto ts = corona_d2_table(cs, g, h1, h2);
  for (int v = 0; v < cs.n; ++v)
    CHECK(ts[cs.g_original_index(v)] == (n2 + 1) * g.degree(v));

  auto cr = double_corona(DerivedKind::R, g, h1, h2);
  auto tr = corona_d2_table(cr, g, h1, h2);
  auto d2_r_base = second_degrees(cr.base.graph);
  for (int j = 0; j < cr.m; ++j)
    CHECK(tr[cr.g_edge_index(j)] == d2_r_base[cr.g_edge_index(j)] + 2 * n1);

  auto cq = double_corona(DerivedKind::Q, g, h1, h2);
  auto tq = corona_d2_table(cq, g, h1, h2);
  auto L = line_graph(g);
  for (int j = 0; j < cq.m; ++j)
    for (int u = 0; u < cq.n2; ++u)
      CHECK(tq[cq.h2_copy_index(j, u)] ==
            (n2 - 1) - h2.degree(u) + 2 + L.graph.degree(j));
}

TEST_CASE("corona preconditions") {
  auto g = Graph::path(3);
  CHECK_THROWS_AS(double_corona(DerivedKind::Subdivision, Graph::empty(2),
                                Graph::complete(1), Graph::complete(1)),
                  DisconnectedInput);
  CHECK_THROWS_AS(double_corona(DerivedKind::Subdivision, g, Graph::empty(0),
                                Graph::complete(1)),
                  EmptyH);
  CHECK_THROWS_AS(double_corona(DerivedKind::Line, g, Graph::complete(1),
                                Graph::complete(1)),
                  Error);

  // disconnected H factors are allowed; the corona stays connected
  auto c = double_corona(DerivedKind::Subdivision, g, Graph::empty(2),
                         Graph::empty(3));
  CHECK(is_connected(c.graph));
  auto claimed = corona_d2_table(c, g, Graph::empty(2), Graph::empty(3));
  auto actual = second_degrees(c.graph);
  for (int v = 0; v < c.graph.vertex_count(); ++v)
    CHECK(claimed[v] == actual[v]);
}
