#pragma once

#include <cstdint>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

// Canonical form of a graph with n <= 11 as the lexicographically largest
// upper-triangle bit code over all vertex orderings (column-major, as in
// graph6). Equal codes <=> isomorphic.
std::uint64_t canonical_code(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

// One representative per isomorphism class, by incremental vertex extension
// with canonical dedup. Practical up to n = 9 or so.
std::vector<Graph> all_graphs_upto_iso(int n);
std::vector<Graph> connected_graphs_upto_iso(int n);

}  // namespace spex
