#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "spex/spectral.hpp"

using namespace spex;

TEST_CASE("spectral radius of standard graphs") {
  CHECK(spectral_radius(make_complete(4)) == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(spectral_radius(make_star(3)) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
  CHECK(spectral_radius(make_complete(10)) == doctest::Approx(9.0).epsilon(1e-9));
  CHECK(spectral_radius(make_complete(1)) == doctest::Approx(0.0));
  CHECK(spectral_radius(make_cycle(6)) == doctest::Approx(2.0).epsilon(1e-9));
  // Bipartite symmetric spectrum exercises the shifted power iteration.
  CHECK(spectral_radius(make_path(2)) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("full spectra") {
  auto eig3 = eigenvalues_sym(adjacency_matrix(make_complete(3)));
  REQUIRE(eig3.size() == 3);
  CHECK(eig3[0] == doctest::Approx(2.0));
  CHECK(eig3[1] == doctest::Approx(-1.0));
  CHECK(eig3[2] == doctest::Approx(-1.0));

  auto c4 = eigenvalues_sym(adjacency_matrix(make_cycle(4)));
  CHECK(c4[0] == doctest::Approx(2.0));
  CHECK(c4[1] == doctest::Approx(0.0));
  CHECK(c4[2] == doctest::Approx(0.0));
  CHECK(c4[3] == doctest::Approx(-2.0));

  SymMatrix zero(5);
  for (double v : eigenvalues_sym(zero)) CHECK(v == doctest::Approx(0.0));
}

TEST_CASE("trace equals eigenvalue sum on random symmetric matrices") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  for (int it = 0; it < 30; ++it) {
    int n = 2 + static_cast<int>(rng() % 7);
    SymMatrix m(n);
    double trace = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        m.at(i, j) = m.at(j, i) = entry(rng);
        if (i == j) trace += m.at(i, j);
      }
    double sum = 0;
    for (double v : eigenvalues_sym(m)) sum += v;
    CHECK(sum == doctest::Approx(trace).epsilon(1e-8));
  }
}

TEST_CASE("Perron eigenvector positivity for connected graphs") {
  for (const Graph& g : {make_complete(5), make_cycle(7), make_star(4),
                         build_family(FamilySpec::tree_extremal(16, 4))}) {
    DominantEig e = dominant_eigenpair(adjacency_matrix(g));
    for (double x : e.vector) CHECK(x > 0.0);
  }
}

TEST_CASE("edge bound sqrt(2e-n+1)") {
  HongBound s = hong_bound(make_star(3));
  CHECK(s.defined);
  CHECK(s.value == doctest::Approx(std::sqrt(3.0)));
  CHECK(s.equality);

  HongBound c = hong_bound(make_cycle(4));
  CHECK(c.value == doctest::Approx(std::sqrt(5.0)));
  CHECK_FALSE(c.equality);

  HongBound k7 = hong_bound(make_complete(7));
  CHECK(k7.value == doctest::Approx(6.0));
  CHECK(k7.equality);

  // Forest with e < (n-1)/2: undefined marker.
  Graph sparse(4);
  sparse.add_edge(0, 1);
  CHECK_FALSE(hong_bound(sparse).defined);
}

TEST_CASE("quotient matrices") {
  SUBCASE("opposite pairs of C4") {
    QuotientMatrix qm = quotient_matrix(make_cycle(4), {{0, 2}, {1, 3}});
    REQUIRE(qm.equitable);
    CHECK(qm.q.at(0, 1) == doctest::Approx(2.0));
    CHECK(qm.q.at(1, 0) == doctest::Approx(2.0));
    CHECK(quotient_largest_eigenvalue(qm) == doctest::Approx(2.0).epsilon(1e-9));
  }
  SUBCASE("positional partition of the k=1, n=11 family") {
    FamilySpec spec = FamilySpec::fke_extremal_a(11, 1);
    QuotientMatrix qm = quotient_matrix(build_family(spec), family_partition(spec));
    REQUIRE(qm.equitable);
    double expected[3][3] = {{1, 8, 1}, {2, 7, 0}, {2, 0, 0}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(qm.q.at(i, j) == doctest::Approx(expected[i][j]));
  }
  SUBCASE("singleton cells reproduce the adjacency matrix") {
    Graph g = make_cycle(5);
    std::vector<std::vector<int>> cells;
    for (int v = 0; v < 5; ++v) cells.push_back({v});
    QuotientMatrix qm = quotient_matrix(g, cells);
    CHECK(qm.equitable);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        CHECK(qm.q.at(i, j) == doctest::Approx(g.has_edge(i, j) ? 1.0 : 0.0));
  }
  SUBCASE("bad partitions are rejected") {
    CHECK_THROWS(quotient_matrix(make_cycle(4), {{0, 1}, {1, 2, 3}}));
    CHECK_THROWS(quotient_matrix(make_cycle(4), {{0, 1}}));
  }
}

TEST_CASE("characteristic cubics") {
  CubicPoly p2 = phi_b2(11, 1);
  CHECK(p2.c2 == -8);
  CHECK(p2.c1 == -11);
  CHECK(p2.c0 == 14);

  // s = 2k collapses the three-cell family onto the two-cell one.
  CHECK(phi_b1(17, 2, 4) == phi_b2(17, 2));
  // Third polynomial is the first with s replaced by delta.
  CHECK(phi_b3(19, 1, 3) == phi_b1(19, 1, 3));
}

TEST_CASE("largest cubic root") {
  CubicPoly p2 = phi_b2(11, 1);
  double r = cubic_largest_root(p2, 1e-12, 9.0, 10.0);
  CHECK(r > 9.0);
  CHECK(r < 9.1);
  CHECK(spectral_radius(build_family(FamilySpec::fke_extremal_a(11, 1))) ==
        doctest::Approx(r).epsilon(1e-8));

  // Double root: (x-1)^2 (x+2) = x^3 - 3x + 2.
  CubicPoly dbl{0, -3, 2};
  CHECK(cubic_largest_root(dbl) == doctest::Approx(1.0).epsilon(1e-6));

  // Quotient root of the tree family agrees with the dense eigensolver.
  FamilySpec spec = FamilySpec::tree_extremal(16, 4);
  Graph g = build_family(spec);
  QuotientMatrix qm = quotient_matrix(g, family_partition(spec));
  CHECK(quotient_largest_eigenvalue(qm) == doctest::Approx(spectral_radius(g)).epsilon(1e-8));
}

TEST_CASE("all real cubic roots") {
  auto roots = cubic_real_roots(phi_b2(11, 1));
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] >= roots[1]);
  CHECK(roots[1] >= roots[2]);
  double sum = roots[0] + roots[1] + roots[2];
  CHECK(sum == doctest::Approx(8.0).epsilon(1e-7));  // -c2
}

TEST_CASE("interlacing") {
  SUBCASE("K3 with two rows kept") {
    InterlacingResult r = check_interlacing(adjacency_matrix(make_complete(3)), {0, 1});
    CHECK(r.ok);
  }
  SUBCASE("identity case: keep everything") {
    InterlacingResult r = check_interlacing(adjacency_matrix(make_cycle(5)), {0, 1, 2, 3, 4});
    CHECK(r.ok);
  }
  SUBCASE("random principal submatrices always interlace") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    for (int it = 0; it < 100; ++it) {
      int n = 2 + static_cast<int>(rng() % 7);
      SymMatrix m(n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.at(i, j) = m.at(j, i) = entry(rng);
      int t = 1 + static_cast<int>(rng() % n);
      std::vector<int> keep;
      for (int v = 0; v < n; ++v) keep.push_back(v);
      for (int v = n - 1; v > 0; --v) std::swap(keep[v], keep[rng() % (v + 1)]);
      keep.resize(t);
      std::sort(keep.begin(), keep.end());
      CHECK(check_interlacing(m, keep).ok);
    }
  }
}

TEST_CASE("subgraph spectral monotonicity on seeded pairs") {
  std::mt19937_64 rng(5);
  int done = 0;
  while (done < 200) {
    int n = 4 + static_cast<int>(rng() % 6);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 10 < 7) g.add_edge(u, v);
    if (!is_connected(g) || edge_count(g) < 2) continue;
    // Remove one random edge to get a proper subgraph.
    auto es = g.edges();
    auto [ru, rv] = es[rng() % es.size()];
    Graph h(n);
    for (auto [u, v] : es)
      if (!(u == ru && v == rv)) h.add_edge(u, v);
    CHECK(spectral_radius(g) > spectral_radius(h) - 1e-12);
    CHECK(spectral_radius(g) - spectral_radius(h) > 1e-9);
    ++done;
  }
}

TEST_CASE("is_complete / is_star structure tests") {
  CHECK(is_complete_graph(make_complete(5)));
  CHECK_FALSE(is_complete_graph(make_cycle(5)));
  CHECK(is_star_graph(make_star(4)));
  CHECK(is_star_graph(make_complete(2)));  // K_2 is both
  CHECK_FALSE(is_star_graph(make_cycle(4)));
}
