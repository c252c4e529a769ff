#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "spex/graph.hpp"
#include "spex/rational.hpp"

namespace spex {

// Subset sweeps refuse above this order; absence claims must stay exact.
constexpr int kSweepCap = 20;

int independence_number(const Graph& g);

// delta_t = min |N(I)| over independent sets I of size t; nullopt when t > alpha.
std::optional<int> delta_t(const Graph& g, int t);

struct SubsetWitness {
  std::vector<int> s;
  Rational lhs;  // i(G - S)
  Rational rhs;
  std::string predicate_name;
};

enum class SweepPredicate { Kaneko, Fpm, Fke };

struct SweepResult {
  bool pass = true;
  std::optional<SubsetWitness> witness;  // lexicographically first violating S
};

// kaneko(d): i(G-S) < 2|S|/(d-2) for all nonempty S.
// fpm:       i(G-S) <= |S| for all S.
// fke(k):    i(G-S) <= |S| - 2k for all S whose induced subgraph has a k-matching.
SweepResult isolated_sweep(const Graph& g, SweepPredicate pred, int param = 0);

// delta_t(g) > t(d-2)/2 for every 1 <= t <= alpha (exact rational compare).
bool delta_condition(const Graph& g, int d);
// Even-index variant: delta_{2t} > t(d-2) for 1 <= t <= alpha/2.
bool delta_even_condition(const Graph& g, int d);

int count_isolated_after_deletion(const Graph& g, std::uint64_t s_mask);

// ---------------------------------------------------------------------------
// Matchings

// Maximum matching size by memoized branching over vertex masks.
int max_matching_size(const Graph& g);
int max_matching_size_masked(const Graph& g, std::uint64_t mask,
                             std::unordered_map<std::uint64_t, int>* memo = nullptr);

struct MatchingStream {
  std::vector<std::vector<std::pair<int, int>>> matchings;
  bool truncated = false;  // count budget exhausted
};

// All k-matchings in lexicographic edge order, up to `budget` of them.
MatchingStream enumerate_k_matchings(const Graph& g, int k, long long budget = 1'000'000);

// ---------------------------------------------------------------------------
// Fractional perfect matchings

struct FractionalMatching {
  // Edge (u < v) -> weight; half-integral: 1 on matched edges, 1/2 on odd cycles.
  std::vector<std::pair<std::pair<int, int>, Rational>> weights;
};

struct FpmResult {
  bool exists = false;
  std::optional<FractionalMatching> certificate;
};

FpmResult has_fpm(const Graph& g);

// Exact re-verification: vertex sums are 1 and the support splits into
// disjoint weight-1 edges and weight-1/2 odd cycles.
bool verify_fpm(const Graph& g, const FractionalMatching& fm);

// ---------------------------------------------------------------------------
// Fractional k-extendability

enum class FkeMode { Definition, Lemma23, Both };

struct FkeVerdict {
  enum class Status { Yes, No, NoKMatching, Disagreement };
  Status status = Status::Yes;
  std::optional<SubsetWitness> witness;                   // lemma23 route
  std::optional<std::vector<std::pair<int, int>>> bad_matching;  // definition route
  bool value() const { return status == Status::Yes; }
};

FkeVerdict is_fractional_k_extendable(const Graph& g, int k, FkeMode mode = FkeMode::Both);

// ---------------------------------------------------------------------------
// Spanning trees and leaf distance

struct TreeCertificate {
  std::vector<std::pair<int, int>> edges;
  int leaf_distance = 0;
  int leaf_degree = 0;
};

// Throws if `edges` is not a spanning tree of `host`.
int leaf_distance(const std::vector<std::pair<int, int>>& edges, const Graph& host);
int leaf_degree(const std::vector<std::pair<int, int>>& edges, const Graph& host);
TreeCertificate make_tree_certificate(const std::vector<std::pair<int, int>>& edges,
                                      const Graph& host);

// Spanning tree count via the matrix-tree theorem (fraction-free integer
// elimination); nullopt on 128-bit overflow, which any budget treats as "huge".
std::optional<__int128> spanning_tree_count(const Graph& g);
std::string int128_str(__int128 v);

enum class TreeSearchMode { Exhaustive, Construct };

struct TreeSearchResult {
  enum class Verdict { Found, Absent, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::optional<TreeCertificate> certificate;
  std::string note;  // e.g. tree-count report on budget refusal
};

TreeSearchResult spanning_tree_leafdist(const Graph& g, int d, TreeSearchMode mode,
                                        long long budget = 1'000'000,
                                        std::uint64_t seed = 1, int restarts = 64);

}  // namespace spex
