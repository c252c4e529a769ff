#pragma once

#include <optional>
#include <vector>

#include "spex/graph.hpp"
#include "spex/rational.hpp"

namespace spex {

// Dense symmetric matrix, row-major.
struct SymMatrix {
  int order = 0;
  std::vector<double> a;

  SymMatrix() = default;
  explicit SymMatrix(int n) : order(n), a(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0) {}

  double& at(int i, int j) { return a[static_cast<size_t>(i) * order + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * order + j]; }

  bool is_symmetric(double tol = 1e-12) const;
};

SymMatrix adjacency_matrix(const Graph& g);

// Full spectrum by cyclic Jacobi, non-increasing order.
std::vector<double> eigenvalues_sym(const SymMatrix& m, double tol = 1e-12);

// Largest eigenvalue plus (sign-normalized) eigenvector. Power iteration on
// A + n*I with a Jacobi fallback when the Perron gap is too small.
struct DominantEig {
  double value = 0.0;
  std::vector<double> vector;
  bool used_fallback = false;
};
DominantEig dominant_eigenpair(const SymMatrix& m, double rel_tol = 1e-12);

double spectral_radius(const Graph& g, double tol = 1e-12);

struct HongBound {
  bool defined = false;    // false when 2e - n + 1 < 0
  double value = 0.0;      // sqrt(2e - n + 1)
  bool equality = false;   // structural: star or complete graph
};
HongBound hong_bound(const Graph& g);

bool is_complete_graph(const Graph& g);
bool is_star_graph(const Graph& g);

// ---------------------------------------------------------------------------
// Quotient matrices of vertex partitions.

struct QuotientMatrix {
  std::vector<std::vector<int>> cells;
  SymMatrix q;             // s x s, not symmetric in general; reuses the dense container
  bool equitable = false;  // exact integer row-sum test per block
};

QuotientMatrix quotient_matrix(const Graph& g, const std::vector<std::vector<int>>& cells);

// The positional (hub, big clique, isolated part) partition of a family graph.
std::vector<std::vector<int>> family_partition(const FamilySpec& spec);

// Largest eigenvalue of a (possibly nonsymmetric) quotient matrix with real
// spectrum, via the characteristic cubic for order 3 and Jacobi otherwise.
double quotient_largest_eigenvalue(const QuotientMatrix& qm, double tol = 1e-12);

// ---------------------------------------------------------------------------
// Monic integer cubics x^3 + c2 x^2 + c1 x + c0.

struct CubicPoly {
  long long c2 = 0, c1 = 0, c0 = 0;

  double eval(double x) const { return ((x + c2) * x + c1) * x + c0; }
  Rational eval(const Rational& x) const {
    return ((x + Rational(c2)) * x + Rational(c1)) * x + Rational(c0);
  }
  double deriv(double x) const { return (3.0 * x + 2.0 * c2) * x + c1; }

  friend bool operator==(const CubicPoly& a, const CubicPoly& b) {
    return a.c2 == b.c2 && a.c1 == b.c1 && a.c0 == b.c0;
  }
};

CubicPoly phi_b1(int n, int k, int s);
CubicPoly phi_b2(int n, int k);
CubicPoly phi_b3(int n, int k, int delta);

// Largest real root. The optional bracket is a hint; it is widened
// geometrically until it straddles the root. Throws std::runtime_error when
// the cubic has no real root reachable from the bracket (cannot happen for a
// monic cubic, which always has one).
double cubic_largest_root(const CubicPoly& p, double tol = 1e-12,
                          std::optional<double> bracket_lo = std::nullopt,
                          std::optional<double> bracket_hi = std::nullopt);

// All three roots when real, non-increasing; middle root is index 1.
std::vector<double> cubic_real_roots(const CubicPoly& p, double tol = 1e-12);

// ---------------------------------------------------------------------------
// Cauchy interlacing check for a principal submatrix.

struct InterlacingResult {
  bool ok = true;
  int violated_index = -1;   // i of the first violated triple, -1 if none
  double lambda_i = 0.0, mu_i = 0.0, lambda_tail = 0.0;
};

InterlacingResult check_interlacing(const SymMatrix& m, const std::vector<int>& keep,
                                    double tol = 1e-9);

}  // namespace spex
