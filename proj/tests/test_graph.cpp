#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spex/graph.hpp"

using namespace spex;

TEST_CASE("complete graph basics") {
  CHECK(edge_count(make_complete(0)) == 0);
  Graph k4 = make_complete(4);
  CHECK(edge_count(k4) == 6);
  for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
  CHECK(edge_count(make_complete(7)) == 21);
}

TEST_CASE("union shifts labels and adds no cross edges") {
  Graph u1 = graph_union(make_complete(1), make_complete(1));
  CHECK(u1.order() == 2);
  CHECK(edge_count(u1) == 0);
  CHECK_FALSE(is_connected(u1));

  Graph u2 = graph_union(make_complete(3), make_complete(2));
  CHECK(u2.order() == 5);
  CHECK(edge_count(u2) == 4);
  CHECK(u2.has_edge(3, 4));
  CHECK_FALSE(u2.has_edge(2, 3));

  Graph qk1(0);
  qk1 = make_complete(0);
  for (int i = 0; i < 5; ++i) qk1 = graph_union(qk1, make_complete(1));
  CHECK(qk1.order() == 5);
  CHECK(edge_count(qk1) == 0);
}

TEST_CASE("join edge counts") {
  Graph g = graph_join(make_complete(2), graph_union(make_complete(1), make_complete(1)));
  CHECK(g.order() == 4);
  CHECK(edge_count(g) == 5);  // K_4 minus one edge

  CHECK(graph_join(make_complete(1), make_complete(6)) == make_complete(7));

  // K_2 v (K_8 u K_1), n=11: 1 + 28 + 2*9 = 47 edges.
  Graph fam = graph_join(make_complete(2), graph_union(make_complete(8), make_complete(1)));
  CHECK(edge_count(fam) == 47);
}

TEST_CASE("join/union edge-count identity on random pairs") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    int n1 = 1 + static_cast<int>(rng() % 6), n2 = 1 + static_cast<int>(rng() % 6);
    Graph g1(n1), g2(n2);
    for (int u = 0; u < n1; ++u)
      for (int v = u + 1; v < n1; ++v)
        if (rng() & 1) g1.add_edge(u, v);
    for (int u = 0; u < n2; ++u)
      for (int v = u + 1; v < n2; ++v)
        if (rng() & 1) g2.add_edge(u, v);
    CHECK(edge_count(graph_join(g1, g2)) - edge_count(graph_union(g1, g2)) ==
          static_cast<long long>(n1) * n2);
  }
}

TEST_CASE("family builders") {
  SUBCASE("tree extremal") {
    FamilySpec spec = FamilySpec::tree_extremal(16, 4);
    Graph g = build_family(spec);
    CHECK(g.order() == 16);
    CHECK(is_connected(g));
    // Exactly one vertex of degree ceil(d/2)-1 = 1 (the pendant).
    int count = 0;
    for (int v = 0; v < 16; ++v)
      if (g.degree(v) == 1) ++count;
    CHECK(count == 1);
  }
  SUBCASE("tree proof family edge count matches the closed form") {
    FamilySpec spec = FamilySpec::tree_proof_g1(16, 4, 2);
    Graph g = build_family(spec);
    CHECK(g.order() == 16);
    CHECK(edge_count(g) == 95);  // C(14,2) + 2*2
    CHECK(spec.hub_size() == 2);
  }
  SUBCASE("fke extremal A") {
    Graph g = build_family(FamilySpec::fke_extremal_a(11, 1));
    CHECK(g.order() == 11);
    CHECK(edge_count(g) == 47);
    CHECK(min_degree(g) == 2);  // the pendant K_1 sees the 2k hub vertices
  }
  SUBCASE("invalid parameters name the violated inequality") {
    CHECK_THROWS_AS(FamilySpec::tree_extremal(2, 4).validate(), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::fke_proof_g1(5, 1, 4).validate(), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::fke_extremal_b(5, 2, 1).validate(), std::invalid_argument);
  }
}

TEST_CASE("delete_vertices") {
  Graph fam = graph_join(make_complete(1), graph_union(make_complete(6), make_complete(1)));
  Graph rest = delete_vertices(fam, {0});
  CHECK(rest.order() == 7);
  CHECK(edge_count(rest) == 15);
  CHECK_FALSE(is_connected(rest));

  Graph same = delete_vertices(fam, {});
  CHECK(same == fam);

  Graph c4 = make_cycle(4);
  Graph rem = delete_vertices(c4, {0, 1});
  CHECK(rem.order() == 2);
  CHECK(edge_count(rem) == 1);
}

TEST_CASE("graph6 round trip and known encodings") {
  CHECK(parse_graph6("Bw") == make_complete(3));
  CHECK(emit_graph6(make_complete(1)) == "@");
  CHECK(parse_graph6(emit_graph6(make_complete(3))) == make_complete(3));

  std::mt19937_64 rng(123);
  for (int it = 0; it < 200; ++it) {
    int n = 1 + static_cast<int>(rng() % 20);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1) g.add_edge(u, v);
    CHECK(parse_graph6(emit_graph6(g)) == g);
  }
  // Long form boundary.
  Graph g63 = make_complete(63);
  CHECK(parse_graph6(emit_graph6(g63)) == g63);
  Graph g64 = make_cycle(64);
  CHECK(parse_graph6(emit_graph6(g64)) == g64);
}

TEST_CASE("graph6 malformed inputs raise distinct errors") {
  CHECK_THROWS(parse_graph6(""));
  CHECK_THROWS(parse_graph6("\x01"));           // bad header byte
  CHECK_THROWS(parse_graph6("D"));              // truncated payload for n=5
  CHECK_THROWS(parse_graph6("Bwww"));           // trailing garbage
}

TEST_CASE("edge list round trip") {
  Graph g = make_cycle(5);
  CHECK(parse_edge_list(emit_edge_list(g)) == g);
  Graph h = parse_edge_list("# a comment\nn 3\n0 1\n1 2\n");
  CHECK(h.order() == 3);
  CHECK(edge_count(h) == 2);
}

TEST_CASE("extremal family coincidence at delta = 2k") {
  Graph a = build_family(FamilySpec::fke_extremal_a(11, 1));
  Graph b = build_family(FamilySpec::fke_extremal_b(11, 1, 2));
  CHECK(a == b);  // identical under the canonical labeling, not just isomorphic
}

TEST_CASE("min degree and connectivity of families") {
  Graph g = build_family(FamilySpec::fke_extremal_a(11, 1));
  CHECK(min_degree(g) == 2);
  Graph t = build_family(FamilySpec::tree_extremal(16, 4));
  CHECK(min_degree(t) == 1);
  CHECK(is_connected(t));
}
