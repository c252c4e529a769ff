#include "spex/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spex {

bool SymMatrix::is_symmetric(double tol) const {
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j)
      if (std::abs(at(i, j) - at(j, i)) > tol) return false;
  return true;
}

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix m(g.order());
  for (auto [u, v] : g.edges()) {
    m.at(u, v) = 1.0;
    m.at(v, u) = 1.0;
  }
  return m;
}

namespace {

// Cyclic Jacobi. Destroys `a`; accumulates rotations into `vecs` when given.
void jacobi_inplace(SymMatrix& a, SymMatrix* vecs) {
  int n = a.order;
  if (vecs) {
    *vecs = SymMatrix(n);
    for (int i = 0; i < n; ++i) vecs->at(i, i) = 1.0;
  }
  if (n <= 1) return;

  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale += a.at(i, j) * a.at(i, j);
  scale = std::sqrt(scale);
  if (scale == 0.0) return;
  const double stop = 1e-14 * scale;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2.0 * a.at(i, j) * a.at(i, j);
    if (std::sqrt(off) < stop) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a.at(p, q);
        if (std::abs(apq) < stop / (n * n)) continue;
        double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int i = 0; i < n; ++i) {
          double aip = a.at(i, p), aiq = a.at(i, q);
          a.at(i, p) = c * aip - s * aiq;
          a.at(i, q) = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          double api = a.at(p, i), aqi = a.at(q, i);
          a.at(p, i) = c * api - s * aqi;
          a.at(q, i) = s * api + c * aqi;
        }
        if (vecs) {
          for (int i = 0; i < n; ++i) {
            double vip = vecs->at(i, p), viq = vecs->at(i, q);
            vecs->at(i, p) = c * vip - s * viq;
            vecs->at(i, q) = s * vip + c * viq;
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<double> eigenvalues_sym(const SymMatrix& m, double /*tol*/) {
  SymMatrix a = m;
  jacobi_inplace(a, nullptr);
  std::vector<double> ev(static_cast<size_t>(m.order));
  for (int i = 0; i < m.order; ++i) ev[static_cast<size_t>(i)] = a.at(i, i);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

DominantEig dominant_eigenpair(const SymMatrix& m, double rel_tol) {
  int n = m.order;
  DominantEig out;
  if (n == 0) return out;
  if (n == 1) {
    out.value = m.at(0, 0);
    out.vector = {1.0};
    return out;
  }

  // Power iteration on A + n*I keeps the dominant eigenvalue simple-signed.
  double shift = static_cast<double>(n);
  std::vector<double> x(static_cast<size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> ax(static_cast<size_t>(n));
  double lambda = 0.0;
  bool converged = false;
  for (int iter = 0; iter < 20000; ++iter) {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += m.at(i, j) * x[static_cast<size_t>(j)];
      ax[static_cast<size_t>(i)] = s;
    }
    lambda = std::inner_product(x.begin(), x.end(), ax.begin(), 0.0);
    double resid = 0.0;
    for (int i = 0; i < n; ++i)
      resid = std::max(resid, std::abs(ax[static_cast<size_t>(i)] - lambda * x[static_cast<size_t>(i)]));
    if (resid <= rel_tol * std::max(1.0, std::abs(lambda) + shift)) {
      converged = true;
      break;
    }
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
      ax[static_cast<size_t>(i)] += shift * x[static_cast<size_t>(i)];
      norm += ax[static_cast<size_t>(i)] * ax[static_cast<size_t>(i)];
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) break;  // A = -n*I only; fall through to Jacobi
    for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] = ax[static_cast<size_t>(i)] / norm;
  }

  if (converged) {
    out.value = lambda;
    out.vector = x;
  } else {
    // Small Perron gap (e.g. disconnected or near-degenerate): full Jacobi.
    SymMatrix a = m, vecs;
    jacobi_inplace(a, &vecs);
    int best = 0;
    for (int i = 1; i < n; ++i)
      if (a.at(i, i) > a.at(best, best)) best = i;
    out.value = a.at(best, best);
    out.vector.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.vector[static_cast<size_t>(i)] = vecs.at(i, best);
    out.used_fallback = true;
  }

  // Sign normalization: make the largest-magnitude entry positive.
  double big = 0.0;
  for (double v : out.vector)
    if (std::abs(v) > std::abs(big)) big = v;
  if (big < 0)
    for (double& v : out.vector) v = -v;
  return out;
}

double spectral_radius(const Graph& g, double tol) {
  if (g.order() < 1) throw std::invalid_argument("spectral_radius: need n >= 1");
  return dominant_eigenpair(adjacency_matrix(g), tol).value;
}

bool is_complete_graph(const Graph& g) {
  long long n = g.order();
  return edge_count(g) == n * (n - 1) / 2;
}

bool is_star_graph(const Graph& g) {
  int n = g.order();
  if (n < 2) return false;
  int centers = 0, leaves = 0;
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    if (d == n - 1)
      ++centers;
    else if (d == 1)
      ++leaves;
    else
      return false;
  }
  if (n == 2) return centers == 2;  // K_2 = K_{1,1}
  return centers == 1 && leaves == n - 1;
}

HongBound hong_bound(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("hong_bound: need n >= 1");
  HongBound b;
  long long v = 2 * edge_count(g) - g.order() + 1;
  if (v < 0) return b;  // undefined marker
  b.defined = true;
  b.value = std::sqrt(static_cast<double>(v));
  b.equality = is_star_graph(g) || is_complete_graph(g);
  return b;
}

// ---------------------------------------------------------------------------

QuotientMatrix quotient_matrix(const Graph& g, const std::vector<std::vector<int>>& cells) {
  int n = g.order();
  std::vector<int> cell_of(static_cast<size_t>(n), -1);
  for (size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].empty()) throw std::invalid_argument("quotient_matrix: empty cell");
    for (int v : cells[c]) {
      if (v < 0 || v >= n) throw std::out_of_range("quotient_matrix: vertex out of range");
      if (cell_of[static_cast<size_t>(v)] != -1)
        throw std::invalid_argument("quotient_matrix: overlapping cells");
      cell_of[static_cast<size_t>(v)] = static_cast<int>(c);
    }
  }
  for (int v = 0; v < n; ++v)
    if (cell_of[static_cast<size_t>(v)] == -1)
      throw std::invalid_argument("quotient_matrix: cells do not cover vertex " + std::to_string(v));

  int s = static_cast<int>(cells.size());
  QuotientMatrix qm;
  qm.cells = cells;
  qm.q = SymMatrix(s);
  qm.equitable = true;
  for (int i = 0; i < s; ++i) {
    std::uint64_t cj_masks = 0;
    (void)cj_masks;
    for (int j = 0; j < s; ++j) {
      std::uint64_t mask_j = 0;
      for (int v : cells[static_cast<size_t>(j)]) mask_j |= std::uint64_t{1} << v;
      long long total = 0;
      int first = -1;
      bool constant = true;
      for (int v : cells[static_cast<size_t>(i)]) {
        int row = std::popcount(g.neighbors(v) & mask_j);
        if (first == -1)
          first = row;
        else if (row != first)
          constant = false;
        total += row;
      }
      if (!constant) qm.equitable = false;
      qm.q.at(i, j) =
          static_cast<double>(total) / static_cast<double>(cells[static_cast<size_t>(i)].size());
    }
  }
  return qm;
}

std::vector<std::vector<int>> family_partition(const FamilySpec& spec) {
  spec.validate();
  std::vector<std::vector<int>> cells;
  int v = 0;
  for (int size : {spec.hub_size(), spec.big_size(), spec.isolated_count()}) {
    std::vector<int> cell;
    for (int i = 0; i < size; ++i) cell.push_back(v++);
    if (!cell.empty()) cells.push_back(std::move(cell));
  }
  return cells;
}

double quotient_largest_eigenvalue(const QuotientMatrix& qm, double tol) {
  // Symmetrize with D^(1/2) Q D^(-1/2), D = diag(cell sizes); valid because
  // q_ij * |V_i| counts edges between the blocks and is symmetric.
  int s = qm.q.order;
  SymMatrix sym(s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      sym.at(i, j) = qm.q.at(i, j) * std::sqrt(static_cast<double>(qm.cells[static_cast<size_t>(i)].size()) /
                                               static_cast<double>(qm.cells[static_cast<size_t>(j)].size()));
  return dominant_eigenpair(sym, tol).value;
}

// ---------------------------------------------------------------------------

CubicPoly phi_b1(int n, int k, int s) {
  CubicPoly p;
  p.c2 = s - 2LL * k + 3 - n;
  p.c1 = 2LL * k * s - static_cast<long long>(s) * s - 2LL * k + 2 - n;
  p.c0 = static_cast<long long>(s) * (s - 2LL * k + 1) * (n - 2LL * s + 2 * k - 2);
  return p;
}

CubicPoly phi_b2(int n, int k) {
  CubicPoly p;
  p.c2 = 3LL - n;
  p.c1 = 2LL - 2 * k - n;
  p.c0 = 2LL * k * (n - 2LL * k - 2);
  return p;
}

CubicPoly phi_b3(int n, int k, int delta) { return phi_b1(n, k, delta); }

namespace {

double bisect_newton(const CubicPoly& p, double lo, double hi, double tol) {
  // Invariant: p(lo) <= 0 <= p(hi) with lo <= root <= hi.
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    double mid = 0.5 * (lo + hi);
    if (p.eval(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 8; ++i) {
    double d = p.deriv(x);
    if (std::abs(d) < 1e-300) break;
    double step = p.eval(x) / d;
    double nx = x - step;
    if (nx < lo || nx > hi) break;
    x = nx;
    if (std::abs(step) < tol * 0.01) break;
  }
  return x;
}

}  // namespace

double cubic_largest_root(const CubicPoly& p, double tol, std::optional<double> bracket_lo,
                          std::optional<double> bracket_hi) {
  double bound = 1.0 + std::max({std::abs(static_cast<double>(p.c2)),
                                 std::abs(static_cast<double>(p.c1)),
                                 std::abs(static_cast<double>(p.c0))});
  // Critical points of the monic cubic.
  double disc = 4.0 * p.c2 * p.c2 - 12.0 * p.c1;
  double scale = std::max(1.0, bound);
  const double near_zero = 1e-9 * scale;

  auto widen_up = [&](double lo) {
    double hi = bracket_hi.value_or(lo + 1.0);
    if (hi <= lo) hi = lo + 1.0;
    double w = hi - lo;
    while (p.eval(hi) < 0.0) {
      hi += w;
      w *= 2.0;
      if (hi > 1e3 * bound) throw std::runtime_error("cubic_largest_root: bracket failure (high)");
    }
    return hi;
  };
  auto widen_down = [&](double hi) {
    double lo = bracket_lo.value_or(hi - 1.0);
    if (lo >= hi) lo = hi - 1.0;
    double w = hi - lo;
    while (p.eval(lo) > 0.0) {
      lo -= w;
      w *= 2.0;
      if (lo < -1e3 * bound) throw std::runtime_error("cubic_largest_root: bracket failure (low)");
    }
    return lo;
  };

  if (disc <= 0.0) {
    // Strictly increasing: a single real root.
    double hi = widen_up(bracket_lo.value_or(-bound));
    double lo = widen_down(hi);
    return bisect_newton(p, lo, hi, tol);
  }

  double sq = std::sqrt(disc);
  double t1 = (-2.0 * p.c2 - sq) / 6.0;
  double t2 = (-2.0 * p.c2 + sq) / 6.0;
  double pt2 = p.eval(t2);
  if (pt2 <= -near_zero) {
    double hi = widen_up(t2);
    return bisect_newton(p, t2, hi, tol);
  }
  if (std::abs(pt2) < near_zero) {
    // Double root at the local minimum (e.g. (x-1)^2 (x+2)).
    return t2;
  }
  double pt1 = p.eval(t1);
  if (std::abs(pt1) < near_zero) return t1;
  // p(t2) > 0: the largest root sits on the increasing branch left of t1.
  double lo = widen_down(t1);
  return bisect_newton(p, lo, t1, tol);
}

std::vector<double> cubic_real_roots(const CubicPoly& p, double tol) {
  double r = cubic_largest_root(p, tol);
  // Deflate: x^3 + c2 x^2 + c1 x + c0 = (x - r)(x^2 + bx + c).
  double b = p.c2 + r;
  double c = p.c1 + r * b;
  double disc = b * b - 4.0 * c;
  if (disc < 0.0 && disc > -1e-8 * std::max(1.0, b * b)) disc = 0.0;
  std::vector<double> roots{r};
  if (disc >= 0.0) {
    double sq = std::sqrt(disc);
    roots.push_back((-b + sq) / 2.0);
    roots.push_back((-b - sq) / 2.0);
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

// ---------------------------------------------------------------------------

InterlacingResult check_interlacing(const SymMatrix& m, const std::vector<int>& keep, double tol) {
  if (keep.empty()) throw std::invalid_argument("check_interlacing: empty index subset");
  int s = m.order;
  int t = static_cast<int>(keep.size());
  SymMatrix sub(t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) sub.at(i, j) = m.at(keep[static_cast<size_t>(i)], keep[static_cast<size_t>(j)]);
  std::vector<double> lam = eigenvalues_sym(m);
  std::vector<double> mu = eigenvalues_sym(sub);
  InterlacingResult r;
  for (int i = 0; i < t; ++i) {
    double top = lam[static_cast<size_t>(i)];
    double bot = lam[static_cast<size_t>(s - t + i)];
    double mid = mu[static_cast<size_t>(i)];
    if (mid > top + tol || mid < bot - tol) {
      r.ok = false;
      r.violated_index = i;
      r.lambda_i = top;
      r.mu_i = mid;
      r.lambda_tail = bot;
      return r;
    }
  }
  return r;
}

}  // namespace spex
