#include "spex/graph.hpp"

#include <bit>
#include <sstream>

namespace spex {

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u + 1 < 64 && u < n_; ++u) {
    std::uint64_t higher = rows_[static_cast<size_t>(u)] >> (u + 1);
    while (higher) {
      int v = u + 1 + std::countr_zero(higher);
      out.emplace_back(u, v);
      higher &= higher - 1;
    }
  }
  return out;
}

Graph make_complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph make_path(int n) {
  Graph g(n);
  for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("make_cycle: need n >= 3");
  Graph g = make_path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph make_star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph graph_union(const Graph& g1, const Graph& g2) {
  int n = g1.order() + g2.order();
  Graph g(n);
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  int off = g1.order();
  for (auto [u, v] : g2.edges()) g.add_edge(u + off, v + off);
  return g;
}

Graph graph_join(const Graph& g1, const Graph& g2) {
  Graph g = graph_union(g1, g2);
  int off = g1.order();
  for (int u = 0; u < g1.order(); ++u)
    for (int v = 0; v < g2.order(); ++v) g.add_edge(u, off + v);
  return g;
}

Graph delete_vertices_mask(const Graph& g, std::uint64_t s_mask) {
  if (s_mask & ~g.full_mask())
    throw std::out_of_range("delete_vertices: vertex index out of range");
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (!((s_mask >> v) & 1u)) keep.push_back(v);
  Graph out(static_cast<int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = i + 1; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

Graph delete_vertices(const Graph& g, const std::vector<int>& s) {
  std::uint64_t mask = 0;
  for (int v : s) {
    if (v < 0 || v >= g.order())
      throw std::out_of_range("delete_vertices: vertex " + std::to_string(v) + " out of range");
    mask |= std::uint64_t{1} << v;
  }
  return delete_vertices_mask(g, mask);
}

long long edge_count(const Graph& g) {
  long long twice = 0;
  for (int v = 0; v < g.order(); ++v) twice += g.degree(v);
  return twice / 2;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("min_degree: empty graph");
  int best = g.degree(0);
  for (int v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::uint64_t component_mask(const Graph& g, int start, std::uint64_t within) {
  std::uint64_t comp = std::uint64_t{1} << start;
  std::uint64_t frontier = comp;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.neighbors(v) & within;
    }
    frontier = next & ~comp;
    comp |= frontier;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("is_connected: empty graph");
  return component_mask(g, 0, g.full_mask()) == g.full_mask();
}

std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Families

namespace {
int ceil_div(int a, int b) { return (a + b - 1) / b; }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("FamilySpec: violated " + what);
}
}  // namespace

FamilySpec FamilySpec::tree_extremal(int n, int d) {
  FamilySpec f;
  f.kind = FamilyKind::TreeExtremal;
  f.n = n;
  f.d = d;
  return f;
}

FamilySpec FamilySpec::tree_proof_g1(int n, int d, int q) {
  FamilySpec f;
  f.kind = FamilyKind::TreeProofG1;
  f.n = n;
  f.d = d;
  f.q = q;
  return f;
}

FamilySpec FamilySpec::fke_proof_g1(int n, int k, int s) {
  FamilySpec f;
  f.kind = FamilyKind::FkeProofG1;
  f.n = n;
  f.k = k;
  f.s = s;
  return f;
}

FamilySpec FamilySpec::fke_extremal_a(int n, int k) {
  FamilySpec f;
  f.kind = FamilyKind::FkeExtremalA;
  f.n = n;
  f.k = k;
  return f;
}

FamilySpec FamilySpec::fke_extremal_b(int n, int k, int delta) {
  FamilySpec f;
  f.kind = FamilyKind::FkeExtremalB;
  f.n = n;
  f.k = k;
  f.delta = delta;
  return f;
}

int FamilySpec::hub_size() const {
  switch (kind) {
    case FamilyKind::TreeExtremal: return ceil_div(d, 2) - 1;
    case FamilyKind::TreeProofG1: return ceil_div(q * (d - 2), 2);
    case FamilyKind::FkeProofG1: return s;
    case FamilyKind::FkeExtremalA: return 2 * k;
    case FamilyKind::FkeExtremalB: return delta;
  }
  throw std::logic_error("unreachable");
}

int FamilySpec::isolated_count() const {
  switch (kind) {
    case FamilyKind::TreeExtremal: return 1;
    case FamilyKind::TreeProofG1: return q;
    case FamilyKind::FkeProofG1: return s - 2 * k + 1;
    case FamilyKind::FkeExtremalA: return 1;
    case FamilyKind::FkeExtremalB: return delta - 2 * k + 1;
  }
  throw std::logic_error("unreachable");
}

int FamilySpec::big_size() const { return n - hub_size() - isolated_count(); }

void FamilySpec::validate() const {
  switch (kind) {
    case FamilyKind::TreeExtremal:
      require(ceil_div(d, 2) - 1 >= 1, "ceil(d/2)-1 >= 1");
      require(n >= ceil_div(d, 2) + 1, "n >= ceil(d/2)+1");
      break;
    case FamilyKind::TreeProofG1:
      require(q >= 1, "q >= 1");
      require(d >= 3, "d >= 3");
      require(big_size() >= 0, "n - ceil(q(d-2)/2) - q >= 0");
      break;
    case FamilyKind::FkeProofG1:
      require(k >= 1, "k >= 1");
      require(s >= 2 * k, "s >= 2k");
      require(n - 2 * s + 2 * k - 1 >= 0, "n - 2s + 2k - 1 >= 0");
      break;
    case FamilyKind::FkeExtremalA:
      require(k >= 1, "k >= 1");
      require(n >= 2 * k + 2, "n >= 2k+2");
      break;
    case FamilyKind::FkeExtremalB:
      require(k >= 1, "k >= 1");
      require(delta - 2 * k + 1 >= 0, "delta - 2k + 1 >= 0");
      require(n >= 2 * delta - 2 * k + 1, "n >= 2*delta - 2k + 1");
      break;
  }
}

std::string FamilySpec::describe() const {
  std::ostringstream os;
  switch (kind) {
    case FamilyKind::TreeExtremal: os << "TreeExtremal(n=" << n << ",d=" << d << ")"; break;
    case FamilyKind::TreeProofG1:
      os << "TreeProofG1(n=" << n << ",d=" << d << ",q=" << q << ")";
      break;
    case FamilyKind::FkeProofG1: os << "FkeProofG1(n=" << n << ",k=" << k << ",s=" << s << ")"; break;
    case FamilyKind::FkeExtremalA: os << "FkeExtremalA(n=" << n << ",k=" << k << ")"; break;
    case FamilyKind::FkeExtremalB:
      os << "FkeExtremalB(n=" << n << ",k=" << k << ",delta=" << delta << ")";
      break;
  }
  return os.str();
}

Graph build_family(const FamilySpec& spec) {
  spec.validate();
  if (spec.n > Graph::kMaxVertices)
    throw std::invalid_argument("build_family: n exceeds the 64-vertex cap");
  Graph hub = make_complete(spec.hub_size());
  Graph big = make_complete(spec.big_size());
  Graph isolated(spec.isolated_count());
  return graph_join(hub, graph_union(big, isolated));
}

}  // namespace spex
