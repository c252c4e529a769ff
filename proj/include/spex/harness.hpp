#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spex/comb.hpp"
#include "spex/graph.hpp"
#include "spex/rational.hpp"
#include "spex/spectral.hpp"

namespace spex {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Closed-form proof quantities.

// psi1(q) = (d-1)q^2 - (2n-2)q + n^2 - 2n + 1
Rational psi1(int n, int d, const Rational& q);

// f(x) = x^2 - s x + (s+1)n - 2s^2 + 2ks - 4s - 2k - 2
Rational f_quadratic(int n, int k, int s, const Rational& x);
double f_quadratic(int n, int k, int s, double x);

// g(x) = x^2 - (s + delta - 2k)x - 2s^2 + ns + 6ks - 2*delta*s - 4s - 2kn
//        + delta*n + n - 2*delta^2 + 6k*delta - 4*delta - 4k^2 + 6k - 2
Rational g_quadratic(int n, int k, int delta, int s, const Rational& x);
double g_quadratic(int n, int k, int delta, int s, double x);

// h(s) = 2s^2 - (5*delta - k + 4)s + 5k*delta - k^2 + 2k
Rational h_of_s(int k, int delta, const Rational& s);

// Boundary constants of the Claim 1 / Case 2 chains.
Rational claim1_boundary_tight(int k);       // n = 2s-2k+1, s = 2k+4  -> 16
Rational claim1_boundary_slack(int k);       // n >= 2s-2k+2, s = 2k+2 -> 8
Rational claim1_boundary_smallest_s(int k);  // s = 2k+1, n = 2k+9     -> 18k+52
Rational case2_h_floor(int k);               // 4k^2 + (11/2)k - 2
Rational case2_low_range_floor(int k);       // 46k^2 - (27/2)k - 25

// ---------------------------------------------------------------------------
// Thresholds

struct ThresholdResult {
  double value = 0.0;
  FamilySpec family;                 // family attaining the threshold
  double method_agreement = 0.0;     // |eigensolver - quotient root|
  std::optional<double> value_a, value_b;  // both fke candidates when applicable
  std::vector<std::string> warnings;
};

ThresholdResult threshold_tree(int n, int d, double tol = 1e-12);
ThresholdResult threshold_fke(int n, int k, int delta, double tol = 1e-12);

// ---------------------------------------------------------------------------
// Audits

struct AuditCheck {
  std::string name;
  bool pass = true;
  std::string lhs, rhs;
};

struct AuditResult {
  std::string task;
  Json params;
  bool pass = true;
  std::vector<AuditCheck> checks;

  void check(const std::string& name, bool ok, const std::string& lhs = "",
             const std::string& rhs = "");
  Json to_json() const;
};

AuditResult audit_psi1(int n, int d);
AuditResult audit_claim1(int n, int k, int s, double tol = 1e-8);
AuditResult audit_gamma2(int n, int k, int s, double tol = 1e-9);
AuditResult audit_case2(int n, int k, int delta, int s, double tol = 1e-8);
AuditResult audit_lemma31(int n, int d, int q, double tol = 1e-8);

bool is_extremal_graph(const Graph& g, const FamilySpec& spec);

// ---------------------------------------------------------------------------
// Theorem verification over graph streams

struct SamplerConfig {
  enum class Kind { Corpus, Mutation, ErdosRenyi };
  Kind kind = Kind::Mutation;
  std::string corpus_path;
  int max_mutations = 3;          // edge edits from the base graph
  bool exhaustive_deletions = false;  // enumerate all <=max_mutations deletions
  long long samples = 100;
  double edge_probability = 0.9;  // ErdosRenyi
  std::uint64_t seed = 1;
};

struct ReportCounts {
  long long pass = 0, fail = 0, skipped = 0, unknown = 0, exception = 0;
  long long total() const { return pass + fail + skipped + unknown + exception; }
};

struct VerificationReport {
  std::string task;
  Json params;
  std::uint64_t seed = 0;
  Json tolerances;
  ReportCounts counts;
  std::vector<Json> counterexamples;  // {"graph6":..., "witness":...}
  std::vector<Json> grid;
  double timing_ms = 0.0;

  bool all_pass() const { return counts.fail == 0 && counterexamples.empty(); }
  Json to_json() const;
};

struct VerifyOptions {
  int jobs = 0;  // 0 = hardware concurrency
  double hypothesis_tol = 1e-9;
  long long tree_budget = 1'000'000;
  int restarts = 64;
  std::string quarantine_path;  // failing instances appended here when set
  bool exploratory = false;     // allow out-of-hypothesis parameters
};

std::vector<Graph> sample_graphs(const Graph& base, const SamplerConfig& cfg);
std::vector<Graph> load_graph6_corpus(const std::string& path);

VerificationReport verify_thm1(int n, int d, const SamplerConfig& sampler,
                               const VerifyOptions& opts = {});
VerificationReport verify_thm2(int n, int k, int delta, const SamplerConfig& sampler,
                               const VerifyOptions& opts = {});

Json tree_certificate_json(const TreeCertificate& cert);
Json fractional_matching_json(const FractionalMatching& fm);
Json subset_witness_json(const SubsetWitness& w);

}  // namespace spex
