#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spex/enumerate.hpp"

using namespace spex;

TEST_CASE("graph counts per isomorphism class") {
  // Known counts of simple graphs up to isomorphism: 1, 2, 4, 11, 34, 156, 1044.
  CHECK(all_graphs_upto_iso(1).size() == 1);
  CHECK(all_graphs_upto_iso(2).size() == 2);
  CHECK(all_graphs_upto_iso(3).size() == 4);
  CHECK(all_graphs_upto_iso(4).size() == 11);
  CHECK(all_graphs_upto_iso(5).size() == 34);
  CHECK(all_graphs_upto_iso(6).size() == 156);
  CHECK(all_graphs_upto_iso(7).size() == 1044);
  // Connected counts: 1, 1, 2, 6, 21, 112, 853.
  CHECK(connected_graphs_upto_iso(4).size() == 6);
  CHECK(connected_graphs_upto_iso(6).size() == 112);
  CHECK(connected_graphs_upto_iso(7).size() == 853);
}

TEST_CASE("canonical code is an isomorphism invariant") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 100; ++it) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1) g.add_edge(u, v);
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    for (int v = n - 1; v > 0; --v) std::swap(perm[v], perm[rng() % (v + 1)]);
    Graph h(n);
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    CHECK(canonical_code(g) == canonical_code(h));
    CHECK(is_isomorphic(g, h));
  }
}

TEST_CASE("non-isomorphic pairs are distinguished") {
  CHECK_FALSE(is_isomorphic(make_path(4), make_star(3)));
  CHECK_FALSE(is_isomorphic(make_cycle(6), graph_union(make_complete(3), make_complete(3))));
  CHECK(canonical_code(make_path(4)) != canonical_code(make_star(3)));
  // Same degree sequence, different graphs: C6 vs two triangles.
  CHECK(canonical_code(make_cycle(6)) !=
        canonical_code(graph_union(make_complete(3), make_complete(3))));
}

TEST_CASE("relabeled family graphs stay isomorphic") {
  Graph g = build_family(FamilySpec::fke_extremal_a(11, 1));
  std::mt19937_64 rng(17);
  std::vector<int> perm(11);
  for (int v = 0; v < 11; ++v) perm[v] = v;
  for (int v = 10; v > 0; --v) std::swap(perm[v], perm[rng() % (v + 1)]);
  Graph h(11);
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  CHECK(is_isomorphic(g, h));
  CHECK_FALSE(is_isomorphic(make_complete(11), g));
}
