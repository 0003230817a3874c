#pragma once

#include "gegenmetric/dieudonne.hpp"
#include "gegenmetric/numeric_matrix.hpp"
#include "gegenmetric/symmetric_eigen.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace gegenmetric {

// ---------------------------------------------------------------------------
// Characteristic polynomials
// ---------------------------------------------------------------------------

// Coefficients c_0..c_N (ascending in lambda) of det(M - lambda I), by the
// division-free Berkowitz recursion. Works over any commutative ring type.
template <class R>
std::vector<R> char_poly(const Matrix<R>& m);

// ---------------------------------------------------------------------------
// Positive definiteness
// ---------------------------------------------------------------------------

// Sylvester criterion on exact entries. failing_minor is the 1-based order
// of the first leading principal minor that is not positive (0 if none).
struct ExactDefiniteness {
  bool positive_definite = false;
  int failing_minor = 0;
  Rational failing_value;
};

ExactDefiniteness is_positive_definite(const RationalMatrix& m);

enum class Definiteness { positive_definite, not_positive_definite, indeterminate };
std::string to_string(Definiteness d);

// Eigenvalue test. tolerance = 10^(8-digits) * ||M||_F; the verdict is
// indeterminate when |min eigenvalue| <= 10 * tolerance.
struct NumericDefiniteness {
  Definiteness status = Definiteness::indeterminate;
  Real min_eigenvalue;
  Real tolerance;
};

NumericDefiniteness is_positive_definite(const NumericMatrix& m, int digits = kDefaultDigits);

// ---------------------------------------------------------------------------
// Parameter lines through the metric family
// ---------------------------------------------------------------------------

// kappa(t) = base + t * direction, sampled at grid_points equally spaced
// rational t in [t_min, t_max].
struct ParameterLine {
  std::vector<Rational> base;
  std::vector<Rational> direction;
  Rational t_min = -1;
  Rational t_max = 1;
  int grid_points = 201;

  // Throws PreconditionError on a zero direction, fewer than two grid
  // points, an empty range or a size mismatch with N.
  void validate(int N) const;
  Rational t(int index) const;
  std::vector<Rational> kappa(const Rational& t) const;
  // True when Theta(kappa(-t)) = S Theta(kappa(t)) S with S = diag(1,-1,1,...):
  // base lives on odd 1-based positions and direction on even ones.
  bool sign_flip_symmetric() const;
};

// First row (2 a0^2, 2 a0 g, 0): the N = 3 toy metric family with t = g.
ParameterLine toy_line(const Rational& a0);

// Repository convention for larger N: base 2 a0^2 e_1 and direction 2 a0 e_2,
// which reduces to toy_line at N = 3 so that t plays the role of g.
ParameterLine default_line(int N, const Rational& a0);

// One refined end of a positivity interval. |inside - outside| < refine_tol,
// Theta is positive definite at `inside` and not at `outside`.
struct BoundaryBracket {
  Rational inside;
  Rational outside;
  Rational estimate() const { return (inside + outside) / 2; }
};

struct PositivityInterval {
  Rational lo;
  Rational hi;
  std::optional<BoundaryBracket> lower;  // empty when open at the range edge
  std::optional<BoundaryBracket> upper;
  bool open_at_lower_edge = false;
  bool open_at_upper_edge = false;
};

struct DomainScan {
  int N = 0;
  Convention convention = Convention::displayed;
  Rational a0;
  ParameterLine line;
  int digits = kDefaultDigits;
  Rational refine_tol;
  std::vector<Rational> t;
  std::vector<std::vector<Real>> curves;  // ascending eigenvalues per grid point
  std::vector<PositivityInterval> intervals;
};

// Default boundary refinement tolerance, 10^-12.
Rational default_refine_tol();

DomainScan scan_domain(int N, Convention convention, const Rational& a0, const ParameterLine& line,
                       int digits = kDefaultDigits,
                       const Rational& refine_tol = default_refine_tol());

// Same scan on a precomputed exact basis at a0 (skips the symbolic solve).
DomainScan scan_domain(const std::vector<RationalMatrix>& basis_at_a0, const Rational& a0,
                       const ParameterLine& line, int digits, const Rational& refine_tol);

// ascending: p_1 <= ... <= p_N at every grid point.
// tracked: curve j follows one eigenvector branch from t_min onwards, matched
// between neighbouring grid points by maximal eigenvector overlap; branches
// pass through (near-)crossings instead of swapping labels.
enum class CurveOrdering { ascending, tracked };

struct CurveTable {
  int N = 0;
  CurveOrdering ordering = CurveOrdering::tracked;
  Rational a0;
  ParameterLine line;
  int digits = kDefaultDigits;
  bool log_scale = false;
  std::vector<Rational> t;
  std::vector<std::vector<Real>> values;         // p_j or ln p_j
  std::vector<std::vector<bool>> nonpositive;    // p_j <= 0 (log undefined)
  // dp_j/dt = v_j^T (dTheta/dt) v_j at each grid point (of p, not ln p).
  std::vector<std::vector<Real>> slopes;
};

CurveTable eigencurves(int N, Convention convention, const Rational& a0, const ParameterLine& line,
                       int digits = kDefaultDigits, bool log_scale = false,
                       CurveOrdering ordering = CurveOrdering::tracked);
CurveTable eigencurves(const std::vector<RationalMatrix>& basis_at_a0, const Rational& a0,
                       const ParameterLine& line, int digits, bool log_scale,
                       CurveOrdering ordering = CurveOrdering::tracked);

// "t,p1,...,pN" with one row per grid point; nonpositive entries of a
// log-scale table are written as "nan".
std::string to_csv(const CurveTable& table);

// Self-contained SVG plot with axes labelled g and p(g).
std::string to_svg(const CurveTable& table);

// ---------------------------------------------------------------------------
// Hermitization
// ---------------------------------------------------------------------------

struct Hermitization {
  NumericMatrix omega;  // symmetric positive square root of Theta
  NumericMatrix h;      // omega H omega^-1
  Real symmetry_defect;  // max |h_ij - h_ji|
  Real root_defect;      // max |(omega omega - Theta)_ij|
  int digits = kDefaultDigits;
};

// Throws PreconditionError when Theta is not positive definite and
// IndeterminateError when the numeric verdict is inside the tolerance band.
Hermitization hermitize(const NumericMatrix& H, const NumericMatrix& theta,
                        int digits = kDefaultDigits);

// ---------------------------------------------------------------------------

template <class R>
std::vector<R> char_poly(const Matrix<R>& m) {
  if (!m.is_square()) throw PreconditionError("char_poly: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return {R(1)};
  // Descending coefficients of det(lambda I - A_r) for leading blocks A_r.
  std::vector<R> c{R(1), R(-m(0, 0))};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<R> toeplitz(r + 2, R(0));
    toeplitz[0] = R(1);
    toeplitz[1] = R(-m(r, r));
    std::vector<R> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      R dot(0);
      for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * v[i];
      toeplitz[k + 2] = R(-dot);
      if (k + 1 == r) break;
      std::vector<R> next(r, R(0));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * v[j];
      v = std::move(next);
    }
    std::vector<R> next_c(r + 2, R(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next_c[i] += toeplitz[i - j] * c[j];
    c = std::move(next_c);
  }
  // det(M - lambda I) = (-1)^n det(lambda I - M), ascending order.
  std::vector<R> ascending(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    ascending[k] = (n % 2 == 0) ? R(c[n - k]) : R(-c[n - k]);
  }
  return ascending;
}

}  // namespace gegenmetric
