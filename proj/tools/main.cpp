// Command-line front end: construction, spectra, combinatorial checkers,
// theorem verifiers, proof audits, and subset sweeps. JSON is the
// authoritative output format; csv/text are convenience views.
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "spex/enumerate.hpp"
#include "spex/harness.hpp"

using namespace spex;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefused = 3;

struct Output {
  std::string format = "json";
  std::string path;  // empty = stdout

  void emit(const Json& doc, const std::string& csv, const std::string& text) const {
    std::string body;
    if (format == "json") body = doc.dump(2) + "\n";
    else if (format == "csv") body = csv;
    else body = text;
    if (path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot open output path: " + path);
      out << body;
    }
  }
};

void add_output_flags(CLI::App* cmd, Output* out) {
  cmd->add_option("--format", out->format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("-o", out->path, "Write output to this path instead of stdout");
}

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Accepts a graph6 line or an edge-list document; "-" reads stdin.
Graph load_graph(const std::string& where) {
  std::string text;
  if (where == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream in(where);
    if (!in) throw std::invalid_argument("cannot open graph file: " + where);
    text = read_all(in);
  }
  // Trim trailing newline(s) for the graph6 attempt.
  std::string first = text;
  if (auto pos = first.find('\n'); pos != std::string::npos) first = first.substr(0, pos);
  if (!first.empty() && first.back() == '\r') first.pop_back();
  try {
    return parse_graph6(first);
  } catch (const std::exception&) {
    return parse_edge_list(text);
  }
}

struct FamilyFlags {
  std::string family;
  int n = 0, d = 0, k = 0, q = 0, s = 0, delta = 0;

  FamilySpec to_spec() const {
    if (family == "tree-extremal") return FamilySpec::tree_extremal(n, d);
    if (family == "tree-proof-g1") return FamilySpec::tree_proof_g1(n, d, q);
    if (family == "fke-proof-g1") return FamilySpec::fke_proof_g1(n, k, s);
    if (family == "fke-extremal-a") return FamilySpec::fke_extremal_a(n, k);
    if (family == "fke-extremal-b") return FamilySpec::fke_extremal_b(n, k, delta);
    throw std::invalid_argument("unknown family: " + family);
  }
};

void add_family_flags(CLI::App* cmd, FamilyFlags* f, bool require) {
  auto* opt = cmd->add_option("--family", f->family,
                              "Family kind: tree-extremal, tree-proof-g1, fke-proof-g1, "
                              "fke-extremal-a, fke-extremal-b");
  if (require) opt->required();
  cmd->add_option("--n", f->n, "Number of vertices");
  cmd->add_option("--d", f->d, "Leaf-distance / degree parameter d");
  cmd->add_option("--k", f->k, "Matching size parameter k");
  cmd->add_option("--q", f->q, "Isolated-part size parameter q");
  cmd->add_option("--s", f->s, "Hub size parameter s");
  cmd->add_option("--delta", f->delta, "Minimum degree parameter delta");
}

Json config_json(const Json& extra) { return extra; }

std::string audit_csv(const AuditResult& r) {
  std::ostringstream ss;
  ss << "check,pass,lhs,rhs\n";
  for (const auto& c : r.checks)
    ss << '"' << c.name << "\"," << (c.pass ? "1" : "0") << ",\"" << c.lhs << "\",\"" << c.rhs
       << "\"\n";
  return ss.str();
}

std::string audit_text(const AuditResult& r) {
  std::ostringstream ss;
  ss << r.task << " " << r.params.dump() << " -> " << (r.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& c : r.checks) {
    ss << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
    if (!c.lhs.empty()) ss << "  lhs=" << c.lhs << " rhs=" << c.rhs;
    ss << "\n";
  }
  return ss.str();
}

int finish_audit(const AuditResult& r, const Output& out, const Json& config) {
  Json doc = r.to_json();
  doc["config"] = config;
  out.emit(doc, audit_csv(r), audit_text(r));
  return r.pass ? kExitPass : kExitFail;
}

std::string report_csv(const VerificationReport& r) {
  std::ostringstream ss;
  ss << "field,value\n";
  ss << "task," << r.task << "\n";
  ss << "pass," << r.counts.pass << "\nfail," << r.counts.fail << "\nskipped,"
     << r.counts.skipped << "\nunknown," << r.counts.unknown << "\nexception,"
     << r.counts.exception << "\n";
  for (const auto& c : r.counterexamples) ss << "counterexample,\"" << c.dump() << "\"\n";
  return ss.str();
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream ss;
  ss << r.task << " " << r.params.dump() << "\n  pass=" << r.counts.pass
     << " fail=" << r.counts.fail << " skipped=" << r.counts.skipped
     << " unknown=" << r.counts.unknown << " exception=" << r.counts.exception << "\n";
  for (const auto& c : r.counterexamples) ss << "  counterexample: " << c.dump() << "\n";
  return ss.str();
}

int finish_report(VerificationReport r, const Output& out, const Json& config) {
  Json doc = r.to_json();
  doc["config"] = config;
  out.emit(doc, report_csv(r), report_text(r));
  return r.all_pass() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spex: spectral thresholds and combinatorial certificates for "
               "spanning-tree leaf distance and fractional k-extendability"};
  app.require_subcommand(1);
  // Holds the action selected during parsing; runs after parse succeeds.
  std::function<int()> action;

  // ---- construct ----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("construct", "Build a named family graph and emit graph6");
    auto flags = std::make_shared<FamilyFlags>();
    auto out = std::make_shared<Output>();
    add_family_flags(cmd, flags.get(), true);
    add_output_flags(cmd, out.get());
    cmd->callback([&action, flags, out] {
      action = [flags, out] {
        FamilySpec spec = flags->to_spec();
        spec.validate();
        Graph g = build_family(spec);
        std::string g6 = emit_graph6(g);
        Json doc{{"family", spec.describe()}, {"graph6", g6}, {"n", g.order()},
                 {"edges", edge_count(g)}};
        if (out->format == "json") {
          out->emit(doc, "", "");
        } else {
          // csv/text both degrade to the raw graph6 line (what pipelines want).
          out->emit(doc, g6 + "\n", g6 + "\n");
        }
        return kExitPass;
      };
    });
  }

  // ---- rho ----------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("rho", "Spectral radius of a graph");
    auto path = std::make_shared<std::string>();
    auto method = std::make_shared<std::string>("eig");
    auto tol = std::make_shared<double>(1e-12);
    auto flags = std::make_shared<FamilyFlags>();
    auto out = std::make_shared<Output>();
    cmd->add_option("graph", *path, "graph6/edge-list path, or - for stdin")->required();
    cmd->add_option("--method", *method, "eig, quotient, or both")
        ->check(CLI::IsMember({"eig", "quotient", "both"}));
    cmd->add_option("--tol", *tol, "Eigensolver tolerance")->capture_default_str();
    add_family_flags(cmd, flags.get(), false);
    add_output_flags(cmd, out.get());
    cmd->callback([&action, path, method, tol, flags, out] {
      action = [path, method, tol, flags, out] {
        Graph g = load_graph(*path);
        Json doc{{"n", g.order()}, {"method", *method}};
        Json config{{"graph", *path}, {"method", *method}, {"tol", *tol}};
        double eig = 0.0, quo = 0.0;
        if (*method != "quotient") {
          eig = spectral_radius(g, *tol);
          doc["eigensolver"] = eig;
        }
        if (*method != "eig") {
          if (flags->family.empty())
            throw std::invalid_argument("--method quotient/both needs --family plus parameters "
                                        "to define the equitable partition");
          FamilySpec spec = flags->to_spec();
          if (!(build_family(spec) == g))
            throw std::invalid_argument("graph does not match build_family(" + spec.describe() +
                                        ") under the canonical labeling");
          QuotientMatrix qm = quotient_matrix(g, family_partition(spec));
          quo = quotient_largest_eigenvalue(qm, *tol);
          doc["quotient"] = quo;
          doc["equitable"] = qm.equitable;
        }
        if (*method == "both") doc["difference"] = std::abs(eig - quo);
        doc["config"] = config;
        double shown = (*method == "quotient") ? quo : eig;
        std::ostringstream txt;
        txt.precision(12);
        txt << shown << "\n";
        out->emit(doc, "rho\n" + txt.str(), txt.str());
        return kExitPass;
      };
    });
  }

  // ---- threshold ----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("threshold", "Spectral-radius thresholds of the theorems");
    cmd->require_subcommand(1);
    struct Args { int n = 0, d = 0, k = 0, delta = 0; double tol = 1e-12; Output out; };
    auto emit_threshold = [](const ThresholdResult& t, const Output& out, const Json& config) {
      Json doc{{"value", t.value},
               {"family", t.family.describe()},
               {"method_agreement", t.method_agreement}};
      if (t.value_a) doc["value_a"] = *t.value_a;
      if (t.value_b) doc["value_b"] = *t.value_b;
      doc["warnings"] = t.warnings;
      doc["config"] = config;
      std::ostringstream txt;
      txt.precision(12);
      txt << t.value << "  (" << t.family.describe() << ")\n";
      out.emit(doc, "value,family\n" + std::to_string(t.value) + ",\"" + t.family.describe() +
                        "\"\n",
               txt.str());
      return kExitPass;
    };
    {
      auto* sub = cmd->add_subcommand("tree", "Threshold of the spanning-tree theorem");
      auto a = std::make_shared<Args>();
      sub->add_option("--n", a->n)->required();
      sub->add_option("--d", a->d)->required();
      sub->add_option("--tol", a->tol)->capture_default_str();
      add_output_flags(sub, &a->out);
      sub->callback([&action, a, emit_threshold] {
        action = [a, emit_threshold] {
          return emit_threshold(threshold_tree(a->n, a->d, a->tol), a->out,
                                Json{{"n", a->n}, {"d", a->d}, {"tol", a->tol}});
        };
      });
    }
    {
      auto* sub = cmd->add_subcommand("fke", "Threshold of the fractional-extendability theorem");
      auto a = std::make_shared<Args>();
      sub->add_option("--n", a->n)->required();
      sub->add_option("--k", a->k)->required();
      sub->add_option("--delta", a->delta)->required();
      sub->add_option("--tol", a->tol)->capture_default_str();
      add_output_flags(sub, &a->out);
      sub->callback([&action, a, emit_threshold] {
        action = [a, emit_threshold] {
          return emit_threshold(
              threshold_fke(a->n, a->k, a->delta, a->tol), a->out,
              Json{{"n", a->n}, {"k", a->k}, {"delta", a->delta}, {"tol", a->tol}});
        };
      });
    }
  }

  // ---- check --------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("check", "Run a combinatorial oracle on one graph");
    cmd->require_subcommand(1);
    {
      auto* sub = cmd->add_subcommand("tree-distance",
                                      "Spanning tree with leaf distance >= d");
      auto path = std::make_shared<std::string>();
      auto d = std::make_shared<int>(0);
      auto mode = std::make_shared<std::string>("exhaustive");
      auto budget = std::make_shared<long long>(1'000'000);
      auto seed = std::make_shared<std::uint64_t>(1);
      auto out = std::make_shared<Output>();
      sub->add_option("graph", *path)->required();
      sub->add_option("--d", *d, "Required leaf distance")->required();
      sub->add_option("--mode", *mode)->check(CLI::IsMember({"exhaustive", "construct"}));
      sub->add_option("--budget", *budget, "Spanning-tree count cap for exhaustive mode")
          ->capture_default_str();
      sub->add_option("--seed", *seed)->capture_default_str();
      add_output_flags(sub, out.get());
      sub->callback([&action, path, d, mode, budget, seed, out] {
        action = [path, d, mode, budget, seed, out] {
          Graph g = load_graph(*path);
          TreeSearchMode m = *mode == "exhaustive" ? TreeSearchMode::Exhaustive
                                                   : TreeSearchMode::Construct;
          TreeSearchResult res = spanning_tree_leafdist(g, *d, m, *budget, *seed);
          std::string verdict = res.verdict == TreeSearchResult::Verdict::Found    ? "found"
                                : res.verdict == TreeSearchResult::Verdict::Absent ? "absent"
                                                                                   : "unknown";
          Json doc{{"verdict", verdict}};
          if (res.certificate) doc["certificate"] = tree_certificate_json(*res.certificate);
          if (!res.note.empty()) doc["note"] = res.note;
          doc["config"] = Json{{"graph", *path}, {"d", *d}, {"mode", *mode},
                               {"budget", *budget}, {"seed", *seed}};
          out->emit(doc, "verdict\n" + verdict + "\n", verdict + "\n");
          if (res.verdict == TreeSearchResult::Verdict::Found) return kExitPass;
          if (res.verdict == TreeSearchResult::Verdict::Absent) return kExitFail;
          return kExitRefused;
        };
      });
    }
    {
      auto* sub = cmd->add_subcommand("fpm", "Fractional perfect matching existence");
      auto path = std::make_shared<std::string>();
      auto out = std::make_shared<Output>();
      sub->add_option("graph", *path)->required();
      add_output_flags(sub, out.get());
      sub->callback([&action, path, out] {
        action = [path, out] {
          Graph g = load_graph(*path);
          FpmResult res = has_fpm(g);
          Json doc{{"verdict", res.exists}};
          if (res.certificate) {
            if (!verify_fpm(g, *res.certificate))
              throw std::runtime_error("internal error: certificate failed re-verification");
            doc["certificate"] = fractional_matching_json(*res.certificate);
          }
          doc["config"] = Json{{"graph", *path}};
          std::string t = res.exists ? "true\n" : "false\n";
          out->emit(doc, "verdict\n" + t, t);
          return res.exists ? kExitPass : kExitFail;
        };
      });
    }
    {
      auto* sub = cmd->add_subcommand("fke", "Fractional k-extendability");
      auto path = std::make_shared<std::string>();
      auto k = std::make_shared<int>(1);
      auto mode = std::make_shared<std::string>("both");
      auto out = std::make_shared<Output>();
      sub->add_option("graph", *path)->required();
      sub->add_option("--k", *k)->required();
      sub->add_option("--mode", *mode)->check(CLI::IsMember({"definition", "lemma23", "both"}));
      add_output_flags(sub, out.get());
      sub->callback([&action, path, k, mode, out] {
        action = [path, k, mode, out] {
          Graph g = load_graph(*path);
          if (g.order() > kSweepCap && *mode != "definition")
            throw std::runtime_error("refused: n exceeds the subset-sweep cap of " +
                                     std::to_string(kSweepCap) + " (use --mode definition)");
          FkeMode m = *mode == "definition" ? FkeMode::Definition
                      : *mode == "lemma23"  ? FkeMode::Lemma23
                                            : FkeMode::Both;
          FkeVerdict v = is_fractional_k_extendable(g, *k, m);
          if (v.status == FkeVerdict::Status::Disagreement)
            throw std::runtime_error("oracle disagreement between definition and sweep modes");
          Json doc{{"verdict", v.value()},
                   {"status", v.status == FkeVerdict::Status::Yes           ? "yes"
                              : v.status == FkeVerdict::Status::No          ? "no"
                                                                            : "no-k-matching"}};
          if (v.witness) doc["witness"] = subset_witness_json(*v.witness);
          if (v.bad_matching) {
            Json m2 = Json::array();
            for (auto [a, b] : *v.bad_matching) m2.push_back(Json::array({a, b}));
            doc["bad_matching"] = m2;
          }
          doc["config"] = Json{{"graph", *path}, {"k", *k}, {"mode", *mode}};
          std::string t = v.value() ? "true\n" : "false\n";
          out->emit(doc, "verdict\n" + t, t);
          return v.value() ? kExitPass : kExitFail;
        };
      });
    }
    {
      auto* sub = cmd->add_subcommand("kaneko", "Isolated-vertex sweep i(G-S) < 2|S|/(d-2)");
      auto path = std::make_shared<std::string>();
      auto d = std::make_shared<int>(0);
      auto out = std::make_shared<Output>();
      sub->add_option("graph", *path)->required();
      sub->add_option("--d", *d)->required();
      add_output_flags(sub, out.get());
      sub->callback([&action, path, d, out] {
        action = [path, d, out] {
          Graph g = load_graph(*path);
          SweepResult res = isolated_sweep(g, SweepPredicate::Kaneko, *d);
          Json doc{{"verdict", res.pass}};
          if (res.witness) doc["witness"] = subset_witness_json(*res.witness);
          doc["config"] = Json{{"graph", *path}, {"d", *d}};
          std::string t = res.pass ? "true\n" : "false\n";
          out->emit(doc, "verdict\n" + t, t);
          return res.pass ? kExitPass : kExitFail;
        };
      });
    }
    {
      auto* sub = cmd->add_subcommand("delta-t",
                                      "Neighborhood condition delta_t > t(d-2)/2 for all t");
      auto path = std::make_shared<std::string>();
      auto d = std::make_shared<int>(0);
      auto out = std::make_shared<Output>();
      sub->add_option("graph", *path)->required();
      sub->add_option("--d", *d)->required();
      add_output_flags(sub, out.get());
      sub->callback([&action, path, d, out] {
        action = [path, d, out] {
          Graph g = load_graph(*path);
          bool ok = delta_condition(g, *d);
          bool even_ok = delta_even_condition(g, *d);
          int alpha = independence_number(g);
          Json table = Json::array();
          for (int t = 1; t <= alpha; ++t)
            table.push_back(Json{{"t", t}, {"delta_t", *delta_t(g, t)}});
          Json doc{{"verdict", ok}, {"even_variant", even_ok}, {"alpha", alpha},
                   {"delta_t", table}};
          doc["config"] = Json{{"graph", *path}, {"d", *d}};
          std::string t = ok ? "true\n" : "false\n";
          out->emit(doc, "verdict\n" + t, t);
          return ok ? kExitPass : kExitFail;
        };
      });
    }
  }

  // ---- sweep --------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "sweep", "Raw isolated-vertex subset sweep over one graph with a chosen predicate");
    auto path = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>("fpm");
    auto d = std::make_shared<int>(3);
    auto k = std::make_shared<int>(1);
    auto out = std::make_shared<Output>();
    cmd->add_option("graph", *path)->required();
    cmd->add_option("--mode", *mode, "Predicate: kaneko, fpm, or fke")
        ->check(CLI::IsMember({"kaneko", "fpm", "fke"}));
    cmd->add_option("--d", *d, "d for the kaneko predicate")->capture_default_str();
    cmd->add_option("--k", *k, "k for the fke predicate")->capture_default_str();
    add_output_flags(cmd, out.get());
    cmd->callback([&action, path, mode, d, k, out] {
      action = [path, mode, d, k, out] {
        Graph g = load_graph(*path);
        SweepPredicate p = *mode == "kaneko" ? SweepPredicate::Kaneko
                           : *mode == "fpm" ? SweepPredicate::Fpm
                                            : SweepPredicate::Fke;
        SweepResult res = isolated_sweep(g, p, p == SweepPredicate::Kaneko ? *d : *k);
        Json doc{{"predicate", *mode}, {"verdict", res.pass}};
        if (res.witness) doc["witness"] = subset_witness_json(*res.witness);
        doc["config"] = Json{{"graph", *path}, {"mode", *mode}, {"d", *d}, {"k", *k}};
        std::string t = res.pass ? "true\n" : "false\n";
        out->emit(doc, "verdict\n" + t, t);
        return res.pass ? kExitPass : kExitFail;
      };
    });
  }

  // ---- verify -------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("verify", "Verify a theorem over a graph stream");
    cmd->require_subcommand(1);
    struct VArgs {
      int n = 0, d = 0, k = 0, delta = 0;
      std::string corpus;
      long long samples = 100;
      int mutations = 3;
      bool exhaustive = false;
      bool exploratory = false;
      std::uint64_t seed = 1;
      int jobs = 0;
      double tol = 1e-9;
      long long budget = 1'000'000;
      std::string quarantine;
      Output out;

      SamplerConfig sampler() const {
        SamplerConfig cfg;
        if (!corpus.empty()) {
          cfg.kind = SamplerConfig::Kind::Corpus;
          cfg.corpus_path = corpus;
        } else {
          cfg.kind = SamplerConfig::Kind::Mutation;
          cfg.max_mutations = mutations;
          cfg.exhaustive_deletions = exhaustive;
          cfg.samples = samples;
        }
        cfg.seed = seed;
        return cfg;
      }
      VerifyOptions options() const {
        VerifyOptions o;
        o.jobs = jobs;
        o.hypothesis_tol = tol;
        o.tree_budget = budget;
        o.quarantine_path = quarantine;
        o.exploratory = exploratory;
        return o;
      }
      Json config() const {
        return Json{{"corpus", corpus},       {"samples", samples},
                    {"mutations", mutations}, {"exhaustive", exhaustive},
                    {"exploratory", exploratory}, {"seed", seed},
                    {"jobs", jobs},           {"tol", tol},
                    {"budget", budget},       {"quarantine", quarantine}};
      }
    };
    auto add_common = [](CLI::App* sub, VArgs* a) {
      sub->add_option("--corpus", a->corpus, "graph6 corpus file (overrides the sampler)");
      sub->add_option("--samples", a->samples)->capture_default_str();
      sub->add_option("--mutations", a->mutations, "Max edge edits from the base graph")
          ->capture_default_str();
      sub->add_flag("--exhaustive", a->exhaustive,
                    "Enumerate every deletion of up to --mutations edges");
      sub->add_flag("--exploratory", a->exploratory, "Allow out-of-hypothesis parameters");
      sub->add_option("--seed", a->seed)->capture_default_str();
      sub->add_option("--jobs", a->jobs, "Worker threads (0 = logical processors)")
          ->capture_default_str();
      sub->add_option("--tol", a->tol, "Hypothesis comparison tolerance")->capture_default_str();
      sub->add_option("--budget", a->budget, "Spanning-tree count cap")->capture_default_str();
      sub->add_option("--quarantine", a->quarantine, "Append failing instances to this file");
      add_output_flags(sub, &a->out);
    };
    {
      auto* sub = cmd->add_subcommand("thm1", "Spanning-tree leaf-distance theorem");
      auto a = std::make_shared<VArgs>();
      sub->add_option("--n", a->n)->required();
      sub->add_option("--d", a->d)->required();
      add_common(sub, a.get());
      sub->callback([&action, a] {
        action = [a] {
          VerificationReport r = verify_thm1(a->n, a->d, a->sampler(), a->options());
          Json config = a->config();
          config["n"] = a->n;
          config["d"] = a->d;
          return finish_report(std::move(r), a->out, config);
        };
      });
    }
    {
      auto* sub = cmd->add_subcommand("thm2", "Fractional k-extendability theorem");
      auto a = std::make_shared<VArgs>();
      sub->add_option("--n", a->n)->required();
      sub->add_option("--k", a->k)->required();
      sub->add_option("--delta", a->delta)->required();
      add_common(sub, a.get());
      sub->callback([&action, a] {
        action = [a] {
          if (a->n > kSweepCap)
            throw std::runtime_error("refused: n exceeds the subset-sweep cap of " +
                                     std::to_string(kSweepCap));
          VerificationReport r = verify_thm2(a->n, a->k, a->delta, a->sampler(), a->options());
          Json config = a->config();
          config["n"] = a->n;
          config["k"] = a->k;
          config["delta"] = a->delta;
          return finish_report(std::move(r), a->out, config);
        };
      });
    }
  }

  // ---- audit --------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("audit", "Audit a proof inequality or a lemma suite");
    cmd->require_subcommand(1);
    struct AArgs {
      int n = 0, d = 0, k = 0, q = 0, s = 0, delta = 0;
      double tol = 1e-8;
      long long samples = 100;
      std::uint64_t seed = 1;
      Output out;
    };
    auto make_simple = [&](const char* name, const char* help,
                           std::vector<const char*> req_flags,
                           std::function<AuditResult(const AArgs&)> run) {
      auto* sub = app.get_subcommand("audit")->add_subcommand(name, help);
      auto a = std::make_shared<AArgs>();
      for (const char* fl : req_flags) {
        if (std::string(fl) == "--n") sub->add_option("--n", a->n)->required();
        if (std::string(fl) == "--d") sub->add_option("--d", a->d)->required();
        if (std::string(fl) == "--k") sub->add_option("--k", a->k)->required();
        if (std::string(fl) == "--q") sub->add_option("--q", a->q)->required();
        if (std::string(fl) == "--s") sub->add_option("--s", a->s)->required();
        if (std::string(fl) == "--delta") sub->add_option("--delta", a->delta)->required();
      }
      sub->add_option("--tol", a->tol)->capture_default_str();
      add_output_flags(sub, &a->out);
      sub->callback([&action, a, run] {
        action = [a, run] {
          AuditResult r = run(*a);
          return finish_audit(r, a->out, Json{{"tol", a->tol}});
        };
      });
    };
    make_simple("psi1", "Quadratic psi1 identity and maximality", {"--n", "--d"},
                [](const AArgs& a) { return audit_psi1(a.n, a.d); });
    make_simple("claim1", "Positivity chain for f at the larger cubic root",
                {"--n", "--k", "--s"},
                [](const AArgs& a) { return audit_claim1(a.n, a.k, a.s, a.tol); });
    make_simple("case2", "Positivity chain for g and h", {"--n", "--k", "--delta", "--s"},
                [](const AArgs& a) { return audit_case2(a.n, a.k, a.delta, a.s, a.tol); });
    make_simple("gamma2", "Middle-eigenvalue bound of the 3x3 quotient", {"--n", "--k", "--s"},
                [](const AArgs& a) { return audit_gamma2(a.n, a.k, a.s, a.tol); });
    make_simple("lemma31", "Edge-count and spectral chain of the tree proof family",
                {"--n", "--d", "--q"},
                [](const AArgs& a) { return audit_lemma31(a.n, a.d, a.q, a.tol); });

    // Exhaustive / property suites.
    {
      auto* sub = app.get_subcommand("audit")->add_subcommand(
          "hong", "Edge bound rho <= sqrt(2e-n+1) over all connected graphs up to --n");
      auto a = std::make_shared<AArgs>();
      a->n = 8;
      sub->add_option("--n", a->n, "Max order (<= 10)")->capture_default_str();
      sub->add_option("--tol", a->tol)->capture_default_str();
      add_output_flags(sub, &a->out);
      sub->callback([&action, a] {
        action = [a] {
          if (a->n > 10) throw std::runtime_error("refused: exhaustive audit capped at n = 10");
          AuditResult r;
          r.task = "audit_hong";
          r.params = {{"max_n", a->n}};
          long long checked = 0;
          for (int n = 1; n <= a->n; ++n) {
            for (const Graph& g : connected_graphs_upto_iso(n)) {
              ++checked;
              HongBound hb = hong_bound(g);
              double rho = spectral_radius(g);
              if (!hb.defined || rho > hb.value + 1e-9) {
                r.check("rho <= sqrt(2e-n+1) on " + emit_graph6(g), false,
                        std::to_string(rho), std::to_string(hb.value));
                continue;
              }
              bool numeric_eq = std::abs(rho - hb.value) <= 1e-9;
              if (numeric_eq != hb.equality)
                r.check("equality iff star or complete on " + emit_graph6(g), false,
                        std::to_string(rho), std::to_string(hb.value));
            }
          }
          r.check("all connected graphs checked", true, std::to_string(checked));
          return finish_audit(r, a->out, Json{{"max_n", a->n}});
        };
      });
    }
    {
      auto* sub = app.get_subcommand("audit")->add_subcommand(
          "interlace", "Random principal-submatrix interlacing property");
      auto a = std::make_shared<AArgs>();
      sub->add_option("--samples", a->samples)->capture_default_str();
      sub->add_option("--seed", a->seed)->capture_default_str();
      add_output_flags(sub, &a->out);
      sub->callback([&action, a] {
        action = [a] {
          AuditResult r;
          r.task = "audit_interlace";
          r.params = {{"samples", a->samples}, {"seed", a->seed}};
          std::mt19937_64 rng(a->seed);
          std::uniform_int_distribution<int> order(2, 8);
          std::uniform_real_distribution<double> entry(-1.0, 1.0);
          for (long long i = 0; i < a->samples; ++i) {
            int n = order(rng);
            SymMatrix m(n);
            for (int x = 0; x < n; ++x)
              for (int y = x; y < n; ++y) m.at(x, y) = m.at(y, x) = entry(rng);
            std::uniform_int_distribution<int> ksz(1, n);
            int t = ksz(rng);
            std::vector<int> keep;
            for (int v = 0; v < n; ++v) keep.push_back(v);
            std::shuffle(keep.begin(), keep.end(), rng);
            keep.resize(static_cast<size_t>(t));
            std::sort(keep.begin(), keep.end());
            InterlacingResult res = check_interlacing(m, keep);
            if (!res.ok)
              r.check("interlacing holds (sample " + std::to_string(i) + ")", false,
                      std::to_string(res.mu_i), std::to_string(res.lambda_i));
          }
          r.check("all samples interlace", true, std::to_string(a->samples));
          return finish_audit(r, a->out, Json{{"samples", a->samples}, {"seed", a->seed}});
        };
      });
    }
    {
      auto* sub = app.get_subcommand("audit")->add_subcommand(
          "lemma21", "Sweep <=> neighborhood-condition equivalence, exhaustive small n");
      auto a = std::make_shared<AArgs>();
      a->n = 7;
      sub->add_option("--n", a->n, "Max order (<= 8)")->capture_default_str();
      add_output_flags(sub, &a->out);
      sub->callback([&action, a] {
        action = [a] {
          if (a->n > 8) throw std::runtime_error("refused: exhaustive audit capped at n = 8");
          AuditResult r;
          r.task = "audit_lemma21";
          r.params = {{"max_n", a->n}};
          long long checked = 0;
          for (int n = 2; n <= a->n; ++n)
            for (const Graph& g : connected_graphs_upto_iso(n))
              for (int d = 3; d <= 6; ++d) {
                ++checked;
                bool sweep_ok = isolated_sweep(g, SweepPredicate::Kaneko, d).pass;
                bool cond_ok = delta_condition(g, d);
                if (sweep_ok != cond_ok)
                  r.check("equivalence on " + emit_graph6(g) + " d=" + std::to_string(d), false,
                          sweep_ok ? "sweep pass" : "sweep fail",
                          cond_ok ? "condition pass" : "condition fail");
              }
          r.check("cases checked", true, std::to_string(checked));
          return finish_audit(r, a->out, Json{{"max_n", a->n}});
        };
      });
    }
    {
      auto* sub = app.get_subcommand("audit")->add_subcommand(
          "lemma23", "Definition <=> sweep characterization, exhaustive small n");
      auto a = std::make_shared<AArgs>();
      a->n = 8;
      a->k = 1;
      sub->add_option("--n", a->n, "Max order (<= 8)")->capture_default_str();
      sub->add_option("--k", a->k)->capture_default_str();
      add_output_flags(sub, &a->out);
      sub->callback([&action, a] {
        action = [a] {
          if (a->n > 8) throw std::runtime_error("refused: exhaustive audit capped at n = 8");
          AuditResult r;
          r.task = "audit_lemma23";
          r.params = {{"max_n", a->n}, {"k", a->k}};
          long long checked = 0;
          for (int n = 2 * a->k + 2; n <= a->n; ++n)
            for (const Graph& g : connected_graphs_upto_iso(n)) {
              if (max_matching_size(g) < a->k) continue;
              ++checked;
              FkeVerdict v = is_fractional_k_extendable(g, a->k, FkeMode::Both);
              if (v.status == FkeVerdict::Status::Disagreement)
                r.check("agreement on " + emit_graph6(g), false);
            }
          r.check("cases checked", true, std::to_string(checked));
          return finish_audit(r, a->out, Json{{"max_n", a->n}, {"k", a->k}});
        };
      });
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    std::cerr << "error: " << msg << "\n";
    return msg.find("cap") != std::string::npos ? kExitRefused : kExitUsage;
  } catch (const std::exception& e) {
    std::string msg = e.what();
    std::cerr << "error: " << msg << "\n";
    return msg.find("refused") != std::string::npos ? kExitRefused : kExitFail;
  }
}
