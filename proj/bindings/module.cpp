// Python bindings for the main operations: graph construction and I/O,
// spectra, combinatorial oracles, thresholds, audits, and theorem streams.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spex/enumerate.hpp"
#include "spex/harness.hpp"

namespace py = pybind11;
using namespace spex;

namespace {

py::object rational_to_py(const Rational& r) {
  py::object fractions = py::module_::import("fractions");
  return fractions.attr("Fraction")(r.num(), r.den());
}

py::dict witness_to_py(const SubsetWitness& w) {
  py::dict d;
  d["predicate"] = w.predicate_name;
  d["S"] = w.s;
  d["lhs"] = rational_to_py(w.lhs);
  d["rhs"] = rational_to_py(w.rhs);
  return d;
}

py::object json_to_py(const Json& j) {
  py::object json_mod = py::module_::import("json");
  return json_mod.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_spex, m) {
  m.doc() = "Spectral thresholds and combinatorial certificates for spanning-tree "
            "leaf distance and fractional k-extendability";

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("order", &Graph::order)
      .def("add_edge", &Graph::add_edge)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) +
               ", m=" + std::to_string(edge_count(g)) + ")";
      });

  m.def("make_complete", &make_complete);
  m.def("make_path", &make_path);
  m.def("make_cycle", &make_cycle);
  m.def("make_star", &make_star);
  m.def("graph_union", &graph_union);
  m.def("graph_join", &graph_join);
  m.def("delete_vertices", &delete_vertices);
  m.def("edge_count", &edge_count);
  m.def("min_degree", &min_degree);
  m.def("is_connected", &is_connected);
  m.def("parse_graph6", &parse_graph6);
  m.def("emit_graph6", &emit_graph6);
  m.def("is_isomorphic", &is_isomorphic);

  py::class_<FamilySpec>(m, "FamilySpec")
      .def_static("tree_extremal", &FamilySpec::tree_extremal, py::arg("n"), py::arg("d"))
      .def_static("tree_proof_g1", &FamilySpec::tree_proof_g1, py::arg("n"), py::arg("d"),
                  py::arg("q"))
      .def_static("fke_proof_g1", &FamilySpec::fke_proof_g1, py::arg("n"), py::arg("k"),
                  py::arg("s"))
      .def_static("fke_extremal_a", &FamilySpec::fke_extremal_a, py::arg("n"), py::arg("k"))
      .def_static("fke_extremal_b", &FamilySpec::fke_extremal_b, py::arg("n"), py::arg("k"),
                  py::arg("delta"))
      .def("validate", &FamilySpec::validate)
      .def("describe", &FamilySpec::describe)
      .def("__repr__", &FamilySpec::describe);
  m.def("build_family", &build_family);

  m.def("spectral_radius", &spectral_radius, py::arg("g"), py::arg("tol") = 1e-12);
  m.def("hong_bound", [](const Graph& g) {
    HongBound b = hong_bound(g);
    py::dict d;
    d["defined"] = b.defined;
    d["value"] = b.value;
    d["equality"] = b.equality;
    return d;
  });
  m.def("independence_number", &independence_number);
  m.def("max_matching_size", &max_matching_size);

  m.def("has_fpm", [](const Graph& g) {
    FpmResult r = has_fpm(g);
    py::dict d;
    d["exists"] = r.exists;
    if (r.certificate) {
      py::list weights;
      for (const auto& [e, w] : r.certificate->weights)
        weights.append(py::make_tuple(e.first, e.second, rational_to_py(w)));
      d["certificate"] = weights;
    }
    return d;
  });

  m.def(
      "is_fractional_k_extendable",
      [](const Graph& g, int k, const std::string& mode) {
        FkeMode m2 = mode == "definition" ? FkeMode::Definition
                     : mode == "lemma23"  ? FkeMode::Lemma23
                     : mode == "both"     ? FkeMode::Both
                                          : throw std::invalid_argument("unknown mode: " + mode);
        FkeVerdict v = is_fractional_k_extendable(g, k, m2);
        if (v.status == FkeVerdict::Status::Disagreement)
          throw std::runtime_error("oracle disagreement between modes");
        py::dict d;
        d["value"] = v.value();
        d["status"] = v.status == FkeVerdict::Status::Yes  ? "yes"
                      : v.status == FkeVerdict::Status::No ? "no"
                                                           : "no-k-matching";
        if (v.witness) d["witness"] = witness_to_py(*v.witness);
        if (v.bad_matching) d["bad_matching"] = *v.bad_matching;
        return d;
      },
      py::arg("g"), py::arg("k"), py::arg("mode") = "both");

  m.def(
      "spanning_tree_leafdist",
      [](const Graph& g, int d, const std::string& mode, long long budget, std::uint64_t seed) {
        TreeSearchMode m2 = mode == "exhaustive" ? TreeSearchMode::Exhaustive
                            : mode == "construct"
                                ? TreeSearchMode::Construct
                                : throw std::invalid_argument("unknown mode: " + mode);
        TreeSearchResult r = spanning_tree_leafdist(g, d, m2, budget, seed);
        py::dict out;
        out["verdict"] = r.verdict == TreeSearchResult::Verdict::Found    ? "found"
                         : r.verdict == TreeSearchResult::Verdict::Absent ? "absent"
                                                                          : "unknown";
        if (r.certificate) {
          py::dict c;
          c["edges"] = r.certificate->edges;
          c["leaf_distance"] = r.certificate->leaf_distance;
          c["leaf_degree"] = r.certificate->leaf_degree;
          out["certificate"] = c;
        }
        if (!r.note.empty()) out["note"] = r.note;
        return out;
      },
      py::arg("g"), py::arg("d"), py::arg("mode") = "exhaustive",
      py::arg("budget") = 1'000'000, py::arg("seed") = 1);

  m.def(
      "threshold_tree",
      [](int n, int d) {
        ThresholdResult t = threshold_tree(n, d);
        py::dict out;
        out["value"] = t.value;
        out["family"] = t.family.describe();
        out["method_agreement"] = t.method_agreement;
        out["warnings"] = t.warnings;
        return out;
      },
      py::arg("n"), py::arg("d"));
  m.def(
      "threshold_fke",
      [](int n, int k, int delta) {
        ThresholdResult t = threshold_fke(n, k, delta);
        py::dict out;
        out["value"] = t.value;
        out["family"] = t.family.describe();
        out["method_agreement"] = t.method_agreement;
        out["warnings"] = t.warnings;
        return out;
      },
      py::arg("n"), py::arg("k"), py::arg("delta"));

  m.def("audit_psi1", [](int n, int d) { return json_to_py(audit_psi1(n, d).to_json()); });
  m.def("audit_claim1",
        [](int n, int k, int s) { return json_to_py(audit_claim1(n, k, s).to_json()); });
  m.def("audit_gamma2",
        [](int n, int k, int s) { return json_to_py(audit_gamma2(n, k, s).to_json()); });
  m.def("audit_case2", [](int n, int k, int delta, int s) {
    return json_to_py(audit_case2(n, k, delta, s).to_json());
  });
  m.def("audit_lemma31",
        [](int n, int d, int q) { return json_to_py(audit_lemma31(n, d, q).to_json()); });

  m.def(
      "verify_thm1",
      [](int n, int d, long long samples, std::uint64_t seed, int jobs) {
        SamplerConfig cfg;
        cfg.samples = samples;
        cfg.seed = seed;
        VerifyOptions opts;
        opts.jobs = jobs;
        return json_to_py(verify_thm1(n, d, cfg, opts).to_json());
      },
      py::arg("n"), py::arg("d"), py::arg("samples") = 100, py::arg("seed") = 1,
      py::arg("jobs") = 0);
  m.def(
      "verify_thm2",
      [](int n, int k, int delta, int max_deletions, std::uint64_t seed, int jobs) {
        SamplerConfig cfg;
        cfg.exhaustive_deletions = true;
        cfg.max_mutations = max_deletions;
        cfg.seed = seed;
        VerifyOptions opts;
        opts.jobs = jobs;
        return json_to_py(verify_thm2(n, k, delta, cfg, opts).to_json());
      },
      py::arg("n"), py::arg("k"), py::arg("delta"), py::arg("max_deletions") = 2,
      py::arg("seed") = 1, py::arg("jobs") = 0);
}
