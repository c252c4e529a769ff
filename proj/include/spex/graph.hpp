#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace spex {

// Simple undirected graph on at most 64 vertices, one adjacency word per
// vertex. Graphs are treated as immutable once built; constructors and the
// family builders are the only writers.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n) : n_(n), rows_(static_cast<size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("Graph: order must be in [0, 64], got " + std::to_string(n));
  }

  int order() const { return n_; }

  std::uint64_t neighbors(int v) const { return rows_[static_cast<size_t>(v)]; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[static_cast<size_t>(u)] >> v) & 1u;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
    rows_[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
    rows_[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
  }

  int degree(int v) const {
    check_vertex(v);
    return std::popcount(rows_[static_cast<size_t>(v)]);
  }

  // Mask with one bit per vertex.
  std::uint64_t full_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range [0, " +
                              std::to_string(n_) + ")");
  }

  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

Graph make_complete(int n);
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_star(int leaves);  // K_{1,leaves}, center is vertex 0

// Disjoint union; g2's labels are shifted by g1.order().
Graph graph_union(const Graph& g1, const Graph& g2);
// Union plus all edges between the two sides, same labeling as graph_union.
Graph graph_join(const Graph& g1, const Graph& g2);

Graph delete_vertices(const Graph& g, const std::vector<int>& s);
Graph delete_vertices_mask(const Graph& g, std::uint64_t s_mask);

long long edge_count(const Graph& g);
int min_degree(const Graph& g);
bool is_connected(const Graph& g);

// Connected component of `start` restricted to `within`, as a vertex mask.
std::uint64_t component_mask(const Graph& g, int start, std::uint64_t within);

std::vector<int> mask_to_vertices(std::uint64_t mask);

// ---------------------------------------------------------------------------
// Named extremal / proof families. All are of the shape
//   K_hub v (K_big u isolated_count * K_1)
// with the hub clique first, then the big clique, then the isolated part.

enum class FamilyKind { TreeExtremal, TreeProofG1, FkeProofG1, FkeExtremalA, FkeExtremalB };

struct FamilySpec {
  FamilyKind kind{};
  int n = 0;
  int d = 0;
  int k = 0;
  int q = 0;
  int s = 0;
  int delta = 0;

  static FamilySpec tree_extremal(int n, int d);
  static FamilySpec tree_proof_g1(int n, int d, int q);
  static FamilySpec fke_proof_g1(int n, int k, int s);
  static FamilySpec fke_extremal_a(int n, int k);
  static FamilySpec fke_extremal_b(int n, int k, int delta);

  // Sizes of the three parts (hub clique, big clique, number of K_1's).
  int hub_size() const;
  int big_size() const;
  int isolated_count() const;

  // Throws std::invalid_argument naming the violated inequality.
  void validate() const;

  std::string describe() const;
};

Graph build_family(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// graph6 (short form for n <= 62, long form for 63..64) and edge-list I/O.

Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

}  // namespace spex
