#include "spex/comb.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace spex {

namespace {

int mis_branch(const Graph& g, std::uint64_t cand, int current, int& best) {
  if (current + std::popcount(cand) <= best) return best;
  if (cand == 0) {
    best = std::max(best, current);
    return best;
  }
  // Branch on a maximum-degree candidate to shrink the subproblem fastest.
  int pivot = -1, pd = -1;
  std::uint64_t c = cand;
  while (c) {
    int v = std::countr_zero(c);
    c &= c - 1;
    int d = std::popcount(g.neighbors(v) & cand);
    if (d > pd) {
      pd = d;
      pivot = v;
    }
  }
  std::uint64_t bit = std::uint64_t{1} << pivot;
  mis_branch(g, cand & ~(g.neighbors(pivot) | bit), current + 1, best);
  mis_branch(g, cand & ~bit, current, best);
  return best;
}

}  // namespace

int independence_number(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("independence_number: need n >= 1");
  int best = 0;
  return mis_branch(g, g.full_mask(), 0, best);
}

namespace {

void delta_t_rec(const Graph& g, int t, int next, std::uint64_t chosen, std::uint64_t nbrs,
                 int& best) {
  if (t == 0) {
    best = std::min(best, std::popcount(nbrs));
    return;
  }
  for (int v = next; v < g.order(); ++v) {
    std::uint64_t bit = std::uint64_t{1} << v;
    if (g.neighbors(v) & chosen) continue;
    delta_t_rec(g, t - 1, v + 1, chosen | bit, nbrs | g.neighbors(v), best);
  }
}

}  // namespace

std::optional<int> delta_t(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("delta_t: need t >= 1");
  int best = std::numeric_limits<int>::max();
  delta_t_rec(g, t, 0, 0, 0, best);
  if (best == std::numeric_limits<int>::max()) return std::nullopt;  // t > alpha
  return best;
}

int count_isolated_after_deletion(const Graph& g, std::uint64_t s_mask) {
  int count = 0;
  std::uint64_t rest = g.full_mask() & ~s_mask;
  std::uint64_t r = rest;
  while (r) {
    int v = std::countr_zero(r);
    r &= r - 1;
    if ((g.neighbors(v) & ~s_mask) == 0) ++count;
  }
  return count;
}

namespace {

struct SweepContext {
  const Graph* g;
  SweepPredicate pred;
  int param;  // d for kaneko, k for fke
  std::unordered_map<std::uint64_t, int> matching_memo;
  SweepResult result;
};

// Returns false to abort the sweep (first violation in lexicographic subset
// order, which this preorder recursion visits directly).
bool sweep_visit(SweepContext& ctx, std::uint64_t s_mask, int s_size) {
  const Graph& g = *ctx.g;
  int iso = count_isolated_after_deletion(g, s_mask);
  Rational lhs(iso), rhs;
  bool ok = true;
  const char* name = "";
  switch (ctx.pred) {
    case SweepPredicate::Kaneko:
      if (s_size == 0) return true;
      rhs = Rational(2 * s_size, ctx.param - 2);
      ok = lhs < rhs;
      name = "kaneko";
      break;
    case SweepPredicate::Fpm:
      rhs = Rational(s_size);
      ok = lhs <= rhs;
      name = "fpm";
      break;
    case SweepPredicate::Fke: {
      if (s_size < 2 * ctx.param) return true;  // cannot host a k-matching
      if (max_matching_size_masked(g, s_mask, &ctx.matching_memo) < ctx.param) return true;
      rhs = Rational(s_size - 2 * ctx.param);
      ok = lhs <= rhs;
      name = "fke";
      break;
    }
  }
  if (!ok) {
    ctx.result.pass = false;
    ctx.result.witness = SubsetWitness{mask_to_vertices(s_mask), lhs, rhs, name};
    return false;
  }
  return true;
}

bool sweep_rec(SweepContext& ctx, std::uint64_t prefix, int size, int next) {
  for (int v = next; v < ctx.g->order(); ++v) {
    std::uint64_t s = prefix | (std::uint64_t{1} << v);
    if (!sweep_visit(ctx, s, size + 1)) return false;
    if (!sweep_rec(ctx, s, size + 1, v + 1)) return false;
  }
  return true;
}

}  // namespace

SweepResult isolated_sweep(const Graph& g, SweepPredicate pred, int param) {
  if (g.order() > kSweepCap)
    throw std::invalid_argument("isolated_sweep: n = " + std::to_string(g.order()) +
                                " exceeds the subset-sweep cap of " + std::to_string(kSweepCap));
  if (pred == SweepPredicate::Kaneko && param < 3)
    throw std::invalid_argument("isolated_sweep: kaneko needs d >= 3");
  if (pred == SweepPredicate::Fke && param < 1)
    throw std::invalid_argument("isolated_sweep: fke needs k >= 1");
  SweepContext ctx{&g, pred, param, {}, {}};
  if (sweep_visit(ctx, 0, 0)) sweep_rec(ctx, 0, 0, 0);
  return ctx.result;
}

bool delta_condition(const Graph& g, int d) {
  if (d < 3) throw std::invalid_argument("delta_condition: need d >= 3");
  int alpha = independence_number(g);
  for (int t = 1; t <= alpha; ++t) {
    int dt = *delta_t(g, t);
    if (!(Rational(dt) > Rational(t * (d - 2), 2))) return false;
  }
  return true;
}

bool delta_even_condition(const Graph& g, int d) {
  if (d < 3) throw std::invalid_argument("delta_even_condition: need d >= 3");
  int alpha = independence_number(g);
  for (int t = 1; 2 * t <= alpha; ++t) {
    int dt = *delta_t(g, 2 * t);
    if (!(dt > t * (d - 2))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Matchings

int max_matching_size_masked(const Graph& g, std::uint64_t mask,
                             std::unordered_map<std::uint64_t, int>* memo) {
  if (mask == 0) return 0;
  if (memo) {
    auto it = memo->find(mask);
    if (it != memo->end()) return it->second;
  }
  int v = std::countr_zero(mask);
  std::uint64_t without_v = mask & (mask - 1);
  int best = max_matching_size_masked(g, without_v, memo);  // v stays unmatched
  std::uint64_t nb = g.neighbors(v) & without_v;
  while (nb) {
    int u = std::countr_zero(nb);
    nb &= nb - 1;
    best = std::max(best,
                    1 + max_matching_size_masked(g, without_v & ~(std::uint64_t{1} << u), memo));
  }
  if (memo) (*memo)[mask] = best;
  return best;
}

int max_matching_size(const Graph& g) {
  std::unordered_map<std::uint64_t, int> memo;
  return max_matching_size_masked(g, g.full_mask(), &memo);
}

namespace {

void enum_matchings_rec(const std::vector<std::pair<int, int>>& edges, size_t idx,
                        std::uint64_t used, int remaining,
                        std::vector<std::pair<int, int>>& current, MatchingStream& out,
                        long long budget) {
  if (remaining == 0) {
    if (static_cast<long long>(out.matchings.size()) >= budget) {
      out.truncated = true;
      return;
    }
    out.matchings.push_back(current);
    return;
  }
  for (size_t i = idx; i < edges.size() && !out.truncated; ++i) {
    auto [u, v] = edges[i];
    std::uint64_t bits = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    if (used & bits) continue;
    current.push_back(edges[i]);
    enum_matchings_rec(edges, i + 1, used | bits, remaining - 1, current, out, budget);
    current.pop_back();
  }
}

}  // namespace

MatchingStream enumerate_k_matchings(const Graph& g, int k, long long budget) {
  if (k < 0) throw std::invalid_argument("enumerate_k_matchings: need k >= 0");
  MatchingStream out;
  auto edges = g.edges();
  std::vector<std::pair<int, int>> current;
  if (k == 0) {
    out.matchings.push_back({});
    return out;
  }
  enum_matchings_rec(edges, 0, 0, k, current, out, budget);
  return out;
}

// ---------------------------------------------------------------------------
// Fractional perfect matchings via a perfect matching in the bipartite
// double cover: left copy u matched to right copy v gives half weight on uv.

namespace {

bool kuhn_augment(const Graph& g, int u, std::vector<int>& match_r, std::uint64_t& visited) {
  std::uint64_t nb = g.neighbors(u);
  while (nb) {
    int v = std::countr_zero(nb);
    nb &= nb - 1;
    std::uint64_t bit = std::uint64_t{1} << v;
    if (visited & bit) continue;
    visited |= bit;
    if (match_r[static_cast<size_t>(v)] == -1 ||
        kuhn_augment(g, match_r[static_cast<size_t>(v)], match_r, visited)) {
      match_r[static_cast<size_t>(v)] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

FpmResult has_fpm(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("has_fpm: need n >= 1");
  int n = g.order();
  std::vector<int> match_r(static_cast<size_t>(n), -1);
  for (int u = 0; u < n; ++u) {
    std::uint64_t visited = 0;
    if (!kuhn_augment(g, u, match_r, visited)) return {};
  }
  // sigma(u) = right partner of left u; a permutation without fixed points.
  std::vector<int> sigma(static_cast<size_t>(n), -1);
  for (int v = 0; v < n; ++v) sigma[static_cast<size_t>(match_r[static_cast<size_t>(v)])] = v;

  FractionalMatching fm;
  std::vector<bool> done(static_cast<size_t>(n), false);
  for (int start = 0; start < n; ++start) {
    if (done[static_cast<size_t>(start)]) continue;
    std::vector<int> cycle;
    int u = start;
    do {
      cycle.push_back(u);
      done[static_cast<size_t>(u)] = true;
      u = sigma[static_cast<size_t>(u)];
    } while (u != start);
    size_t len = cycle.size();
    auto edge_of = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    if (len == 2) {
      fm.weights.emplace_back(edge_of(cycle[0], cycle[1]), Rational(1));
    } else if (len % 2 == 1) {
      for (size_t i = 0; i < len; ++i)
        fm.weights.emplace_back(edge_of(cycle[i], cycle[(i + 1) % len]), Rational(1, 2));
    } else {
      // Even sigma-cycle: round to an alternating integer matching.
      for (size_t i = 0; i < len; i += 2)
        fm.weights.emplace_back(edge_of(cycle[i], cycle[i + 1]), Rational(1));
    }
  }
  FpmResult r;
  r.exists = true;
  r.certificate = std::move(fm);
  return r;
}

bool verify_fpm(const Graph& g, const FractionalMatching& fm) {
  int n = g.order();
  std::vector<Rational> sum(static_cast<size_t>(n));
  std::vector<std::vector<int>> half_adj(static_cast<size_t>(n));
  std::uint64_t matched = 0;
  for (const auto& [e, w] : fm.weights) {
    auto [u, v] = e;
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
    if (!g.has_edge(u, v)) return false;
    sum[static_cast<size_t>(u)] = sum[static_cast<size_t>(u)] + w;
    sum[static_cast<size_t>(v)] = sum[static_cast<size_t>(v)] + w;
    if (w == Rational(1)) {
      std::uint64_t bits = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
      if (matched & bits) return false;  // weight-1 edges must be disjoint
      matched |= bits;
    } else if (w == Rational(1, 2)) {
      half_adj[static_cast<size_t>(u)].push_back(v);
      half_adj[static_cast<size_t>(v)].push_back(u);
    } else {
      return false;  // certificate form is half-integral
    }
  }
  for (int v = 0; v < n; ++v)
    if (sum[static_cast<size_t>(v)] != Rational(1)) return false;
  // Half-weight support must be disjoint odd cycles.
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v = 0; v < n; ++v) {
    size_t deg = half_adj[static_cast<size_t>(v)].size();
    if (deg != 0 && deg != 2) return false;
    if (deg == 2 && !seen[static_cast<size_t>(v)]) {
      int len = 0, prev = -1, cur = v;
      do {
        seen[static_cast<size_t>(cur)] = true;
        ++len;
        int next = half_adj[static_cast<size_t>(cur)][0] == prev
                       ? half_adj[static_cast<size_t>(cur)][1]
                       : half_adj[static_cast<size_t>(cur)][0];
        prev = cur;
        cur = next;
      } while (cur != v);
      if (len % 2 == 0) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

FkeVerdict is_fractional_k_extendable(const Graph& g, int k, FkeMode mode) {
  if (k < 1) throw std::invalid_argument("is_fractional_k_extendable: need k >= 1");
  if (g.order() < 2 * k + 2)
    throw std::invalid_argument("is_fractional_k_extendable: need n >= 2k+2");

  FkeVerdict verdict;
  if (max_matching_size(g) < k) {
    verdict.status = FkeVerdict::Status::NoKMatching;
    return verdict;
  }

  std::optional<bool> by_definition, by_lemma;
  if (mode == FkeMode::Definition || mode == FkeMode::Both) {
    bool ok = true;
    auto ms = enumerate_k_matchings(g, k);
    for (const auto& m : ms.matchings) {
      std::uint64_t vm = 0;
      for (auto [u, v] : m) vm |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
      Graph rest = delete_vertices_mask(g, vm);
      if (!has_fpm(rest).exists) {
        ok = false;
        verdict.bad_matching = m;
        break;
      }
    }
    by_definition = ok;
  }
  if (mode == FkeMode::Lemma23 || mode == FkeMode::Both) {
    SweepResult sr = isolated_sweep(g, SweepPredicate::Fke, k);
    by_lemma = sr.pass;
    if (!sr.pass) verdict.witness = sr.witness;
  }
  if (mode == FkeMode::Both && *by_definition != *by_lemma) {
    verdict.status = FkeVerdict::Status::Disagreement;
    return verdict;
  }
  bool value = by_definition.value_or(by_lemma.value_or(true));
  verdict.status = value ? FkeVerdict::Status::Yes : FkeVerdict::Status::No;
  return verdict;
}

}  // namespace spex
