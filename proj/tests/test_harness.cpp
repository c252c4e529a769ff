#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>

#include "spex/enumerate.hpp"
#include "spex/harness.hpp"

using namespace spex;

TEST_CASE("closed-form quantities") {
  // psi1(2) = psi1(8) = 177 at (n, d) = (16, 4); difference 0 since n = d^2.
  CHECK(psi1(16, 4, Rational(2)) == Rational(177));
  CHECK(psi1(16, 4, Rational(8)) == Rational(177));

  for (int k = 1; k <= 5; ++k) {
    CHECK(claim1_boundary_tight(k) == Rational(16));
    CHECK(claim1_boundary_slack(k) == Rational(8));
    CHECK(claim1_boundary_smallest_s(k) == Rational(18LL * k + 52));
    CHECK(case2_h_floor(k) ==
          Rational(4LL * k * k) + Rational(11, 2) * Rational(k) - Rational(2));
    CHECK(case2_low_range_floor(k) ==
          Rational(46LL * k * k) - Rational(27, 2) * Rational(k) - Rational(25));
    CHECK(case2_h_floor(k) > Rational(0));
    CHECK(case2_low_range_floor(k) > Rational(0));
  }
}

TEST_CASE("psi1 identity on the full small grid") {
  for (int d = 3; d <= 8; ++d)
    for (int n = d * d; n <= d * d + 20; ++n) {
      Rational diff = psi1(n, d, Rational(2 * n, d)) - psi1(n, d, Rational(2));
      Rational closed = -(Rational(4, static_cast<long long>(d) * d) * Rational(n - d) *
                          Rational(n - static_cast<long long>(d) * d));
      CHECK(diff == closed);
      CHECK(diff <= Rational(0));
    }
}

TEST_CASE("thresholds") {
  SUBCASE("tree threshold sits strictly between n-2 and n-1") {
    ThresholdResult t = threshold_tree(16, 4);
    CHECK(t.value > 14.0);
    CHECK(t.value < 15.0);
    CHECK(t.method_agreement < 1e-8);
    CHECK(t.warnings.empty());
  }
  SUBCASE("tree threshold grid agreement") {
    // Grid clipped to the 64-vertex representation cap.
    for (int d = 4; d <= 8; ++d)
      for (int n = d * d; n <= std::min(d * d + 8, 64); ++n)
        CHECK(threshold_tree(n, d).method_agreement < 1e-8);
  }
  SUBCASE("fke threshold at the coincidence point") {
    ThresholdResult t = threshold_fke(11, 1, 2);
    CHECK(t.value == doctest::Approx(cubic_largest_root(phi_b2(11, 1))).epsilon(1e-8));
    CHECK(t.value > 9.0);
    CHECK(t.value < 9.1);
    REQUIRE(t.value_a.has_value());
    REQUIRE(t.value_b.has_value());
    CHECK(*t.value_a == doctest::Approx(*t.value_b).epsilon(1e-10));
  }
  SUBCASE("fke threshold exceeds n-2 on a grid") {
    for (int k = 1; k <= 2; ++k)
      for (int delta = 2 * k; delta <= 2 * k + 2; ++delta) {
        int n = std::max(2 * k + 9, 5 * delta + 1);
        ThresholdResult t = threshold_fke(n, k, delta);
        CHECK(t.value > n - 2);
        CHECK(t.method_agreement < 1e-8);
      }
  }
  SUBCASE("out-of-hypothesis parameters warn") {
    CHECK_FALSE(threshold_tree(10, 4).warnings.empty());
    CHECK_FALSE(threshold_fke(10, 1, 3).warnings.empty());
  }
}

TEST_CASE("audits pass on their documented grids") {
  SUBCASE("psi1") {
    for (int d = 3; d <= 6; ++d)
      for (int n = d * d; n <= d * d + 10; ++n) CHECK(audit_psi1(n, d).pass);
  }
  SUBCASE("lemma31 chain") {
    for (int d = 4; d <= 6; ++d)
      for (int n = d * d; n <= d * d + 6; ++n)
        for (int q = 2; q * d <= 2 * n; ++q) {
          AuditResult r = audit_lemma31(n, d, q);
          if (!r.pass)
            for (const auto& c : r.checks)
              if (!c.pass) MESSAGE(r.params.dump(), " ", c.name, " lhs=", c.lhs, " rhs=", c.rhs);
          CHECK(r.pass);
        }
  }
  SUBCASE("claim1 and gamma2") {
    for (int k = 1; k <= 2; ++k)
      for (int s = 2 * k + 1; s <= 2 * k + 6; ++s)
        for (int n = std::max(2 * k + 9, 2 * s - 2 * k + 1); n <= 40; n += 3) {
          CHECK(audit_claim1(n, k, s).pass);
          CHECK(audit_gamma2(n, k, s).pass);
        }
  }
  SUBCASE("case2") {
    for (int k = 1; k <= 2; ++k)
      for (int delta = 2 * k + 1; delta <= 2 * k + 4; ++delta)
        for (int s = delta + 1; s <= delta + 5; ++s) {
          int n0 = std::max(2 * s - 2 * k + 1, 5 * delta + 1);
          for (int n = n0; n <= std::min(60, n0 + 9); n += 3)
            CHECK(audit_case2(n, k, delta, s).pass);
        }
  }
  SUBCASE("precondition violations throw") {
    CHECK_THROWS_AS(audit_psi1(8, 3), std::invalid_argument);
    CHECK_THROWS_AS(audit_claim1(10, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(audit_case2(20, 1, 2, 4), std::invalid_argument);
  }
}

TEST_CASE("extremal graph identification") {
  FamilySpec spec = FamilySpec::tree_extremal(16, 4);
  Graph g = build_family(spec);
  CHECK(is_extremal_graph(g, spec));
  CHECK_FALSE(is_extremal_graph(make_complete(16), spec));
  std::mt19937_64 rng(8);
  std::vector<int> perm(16);
  for (int v = 0; v < 16; ++v) perm[v] = v;
  for (int v = 15; v > 0; --v) std::swap(perm[v], perm[rng() % (v + 1)]);
  Graph h(16);
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  CHECK(is_extremal_graph(h, spec));
}

TEST_CASE("samplers") {
  SUBCASE("exhaustive deletions from K5 up to 2 edges") {
    SamplerConfig cfg;
    cfg.kind = SamplerConfig::Kind::Mutation;
    cfg.exhaustive_deletions = true;
    cfg.max_mutations = 2;
    auto graphs = sample_graphs(make_complete(5), cfg);
    CHECK(graphs.size() == 1 + 10 + 45);  // C(10,0) + C(10,1) + C(10,2)
  }
  SUBCASE("mutation sampler is deterministic per seed") {
    SamplerConfig cfg;
    cfg.samples = 25;
    cfg.seed = 42;
    auto a = sample_graphs(make_complete(8), cfg);
    auto b = sample_graphs(make_complete(8), cfg);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    cfg.seed = 43;
    auto c = sample_graphs(make_complete(8), cfg);
    bool any_diff = false;
    for (size_t i = 0; i < a.size(); ++i)
      if (!(a[i] == c[i])) any_diff = true;
    CHECK(any_diff);
  }
  SUBCASE("corpus loader") {
    std::string path = "corpus_test.g6";
    {
      std::ofstream out(path);
      out << emit_graph6(make_complete(5)) << "\n" << emit_graph6(make_cycle(6)) << "\n";
    }
    auto graphs = load_graph6_corpus(path);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == make_complete(5));
    CHECK(graphs[1] == make_cycle(6));
    std::remove(path.c_str());
    CHECK_THROWS(load_graph6_corpus("no_such_file.g6"));
  }
}

TEST_CASE("theorem verification reports") {
  SUBCASE("thm1 smoke run with zero failures") {
    SamplerConfig cfg;
    cfg.samples = 30;
    cfg.seed = 7;
    VerifyOptions opts;
    opts.jobs = 2;
    VerificationReport r = verify_thm1(16, 4, cfg, opts);
    CHECK(r.counts.fail == 0);
    CHECK(r.counts.unknown == 0);
    CHECK(r.counts.pass > 0);
    CHECK(r.counts.total() == 30);
  }
  SUBCASE("thm2 exhaustive 2-deletion run") {
    SamplerConfig cfg;
    cfg.exhaustive_deletions = true;
    cfg.max_mutations = 2;
    cfg.seed = 1;
    VerificationReport r = verify_thm2(11, 1, 1, cfg);
    CHECK(r.counts.fail == 0);
    CHECK(r.counts.total() == 1 + 55 + 55 * 54 / 2);
  }
  SUBCASE("extremal graphs are flagged as exceptions, not failures") {
    SamplerConfig cfg;
    cfg.kind = SamplerConfig::Kind::Corpus;
    std::string path = "extremal_test.g6";
    {
      std::ofstream out(path);
      out << emit_graph6(build_family(FamilySpec::fke_extremal_a(11, 1))) << "\n";
    }
    cfg.corpus_path = path;
    VerificationReport r = verify_thm2(11, 1, 2, cfg);
    std::remove(path.c_str());
    CHECK(r.counts.exception == 1);
    CHECK(r.counts.fail == 0);
  }
  SUBCASE("reports are deterministic modulo timing") {
    SamplerConfig cfg;
    cfg.samples = 20;
    cfg.seed = 99;
    VerifyOptions opts;
    opts.jobs = 3;
    Json a = verify_thm1(16, 4, cfg, opts).to_json();
    opts.jobs = 1;
    Json b = verify_thm1(16, 4, cfg, opts).to_json();
    a.erase("timing_ms");
    b.erase("timing_ms");
    CHECK(a.dump() == b.dump());
  }
  SUBCASE("out-of-hypothesis parameters are rejected without the override") {
    SamplerConfig cfg;
    CHECK_THROWS_AS(verify_thm1(10, 4, cfg), std::invalid_argument);
    VerifyOptions opts;
    opts.exploratory = true;
    VerificationReport r = verify_thm1(10, 4, cfg, opts);
    CHECK(r.params["exploratory"] == true);
  }
}

TEST_CASE("counts balance: pass+fail+skipped+unknown+exception = instances") {
  SamplerConfig cfg;
  cfg.samples = 40;
  cfg.seed = 5;
  cfg.max_mutations = 6;
  VerificationReport r = verify_thm1(16, 4, cfg);
  CHECK(r.counts.total() == 40);
}
