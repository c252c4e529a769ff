#include "spex/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace spex {

namespace {

struct CanonCtx {
  const Graph* g = nullptr;
  int n = 0;
  std::vector<int> perm;      // position -> original vertex
  std::vector<int> cols;      // cols[p] = adjacency bits of perm[p] to positions 0..p-1
  std::vector<int> best;
  bool have_best = false;
  std::uint64_t used = 0;

  int column_of(int u, int p) const {
    int col = 0;
    for (int i = 0; i < p; ++i)
      col = (col << 1) | (g->has_edge(u, perm[static_cast<size_t>(i)]) ? 1 : 0);
    return col;
  }

  // tied: current prefix equals `best` prefix (pruning hint only; the leaf
  // does a full compare, so stale flags after a best update stay safe).
  void rec(int p, bool tied) {
    if (p == n) {
      if (!have_best || cols > best) {
        best = cols;
        have_best = true;
      }
      return;
    }
    int maxcol = -1;
    std::vector<int> cands;
    for (int u = 0; u < n; ++u) {
      if ((used >> u) & 1u) continue;
      int col = column_of(u, p);
      if (col > maxcol) {
        maxcol = col;
        cands.clear();
      }
      if (col == maxcol) cands.push_back(u);
    }
    if (tied && have_best) {
      if (maxcol < best[static_cast<size_t>(p)]) return;
      if (maxcol > best[static_cast<size_t>(p)]) tied = false;
    }
    // Twins (same neighborhood up to each other) are interchangeable.
    std::vector<int> pruned;
    for (int u : cands) {
      bool dup = false;
      for (int w : pruned) {
        std::uint64_t bu = std::uint64_t{1} << u, bw = std::uint64_t{1} << w;
        if ((g->neighbors(u) & ~bw) == (g->neighbors(w) & ~bu)) {
          dup = true;
          break;
        }
      }
      if (!dup) pruned.push_back(u);
    }
    for (int u : pruned) {
      perm[static_cast<size_t>(p)] = u;
      cols[static_cast<size_t>(p)] = maxcol;
      used |= std::uint64_t{1} << u;
      rec(p + 1, tied);
      used &= ~(std::uint64_t{1} << u);
    }
  }
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  int n = g.order();
  if (n > 11) throw std::invalid_argument("canonical_code: supported only for n <= 11");
  if (n <= 1) return 0;
  CanonCtx ctx;
  ctx.g = &g;
  ctx.n = n;
  ctx.perm.assign(static_cast<size_t>(n), -1);
  ctx.cols.assign(static_cast<size_t>(n), 0);
  ctx.rec(0, false);
  std::uint64_t code = 0;
  for (int p = 1; p < n; ++p)
    code = (code << p) | static_cast<std::uint64_t>(ctx.best[static_cast<size_t>(p)]);
  return code;
}

// ---------------------------------------------------------------------------

namespace {

bool iso_rec(const Graph& a, const Graph& b, const std::vector<int>& order, size_t idx,
             std::vector<int>& map, std::uint64_t used_b) {
  if (idx == order.size()) return true;
  int u = order[idx];
  for (int v = 0; v < b.order(); ++v) {
    if ((used_b >> v) & 1u) continue;
    if (a.degree(u) != b.degree(v)) continue;
    bool ok = true;
    for (size_t j = 0; j < idx && ok; ++j) {
      int u2 = order[j];
      if (a.has_edge(u, u2) != b.has_edge(v, map[static_cast<size_t>(u2)])) ok = false;
    }
    if (!ok) continue;
    map[static_cast<size_t>(u)] = v;
    if (iso_rec(a, b, order, idx + 1, map, used_b | (std::uint64_t{1} << v))) return true;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
  int n = a.order();
  if (n != b.order()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  if (n == 0) return true;
  // Map rare degree classes first: order a's vertices by (class size, degree).
  std::unordered_map<int, int> freq;
  for (int v = 0; v < n; ++v) ++freq[a.degree(v)];
  std::vector<int> order(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    int fx = freq[a.degree(x)], fy = freq[a.degree(y)];
    if (fx != fy) return fx < fy;
    return a.degree(x) > a.degree(y);
  });
  std::vector<int> map(static_cast<size_t>(n), -1);
  return iso_rec(a, b, order, 0, map, 0);
}

// ---------------------------------------------------------------------------

std::vector<Graph> all_graphs_upto_iso(int n) {
  if (n < 1 || n > 11) throw std::invalid_argument("all_graphs_upto_iso: need 1 <= n <= 11");
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::vector<Graph> next;
    std::unordered_set<std::uint64_t> seen;
    for (const Graph& g : level) {
      int old_n = g.order();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << old_n); ++mask) {
        Graph h(m);
        for (auto [u, v] : g.edges()) h.add_edge(u, v);
        for (int u = 0; u < old_n; ++u)
          if ((mask >> u) & 1u) h.add_edge(u, old_n);
        std::uint64_t code = canonical_code(h);
        if (seen.insert(code).second) next.push_back(std::move(h));
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Graph> connected_graphs_upto_iso(int n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs_upto_iso(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace spex
