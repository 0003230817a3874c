#pragma once

#include "gegenmetric/rat_poly.hpp"
#include "gegenmetric/rational.hpp"
#include "gegenmetric/real.hpp"

#include <vector>

namespace gegenmetric {

// Gegenbauer (ultraspherical) polynomials C_n^(alpha)(x), normalized by
//   C_0 = 1, C_1 = 2 alpha x,
//   (n+1) C_{n+1} = 2 x (n+alpha) C_n - (n+2 alpha-1) C_{n-1}.

// Coefficient rows 0..order_max for a fixed alpha. Row n has degree n and
// only powers of x with the parity of n.
struct GegenbauerTable {
  int order_max = 0;
  Rational alpha;
  std::vector<RatPoly> rows;
};

GegenbauerTable gegenbauer_table(int order_max, const Rational& alpha);

Rational gegenbauer_eval(int n, const Rational& alpha, const Rational& x);

// Same recurrence in floating point; used for eigenvector components.
Real gegenbauer_eval(int n, const Real& alpha, const Real& x);

RatPoly gegenbauer_coeffs(int n, const Rational& alpha);

// Roots E_0 < ... < E_{N-1} of C_N^(alpha), the lattice spectrum.
struct EnergySpectrum {
  int N = 0;
  Rational alpha;
  std::vector<Real> roots;
  int precision_digits = kDefaultDigits;
};

// Brackets the roots of C_k inside consecutive roots of C_{k-1} (and +-1),
// k = 1..N, then bisects and Newton-polishes on the exact coefficient
// polynomial. Requires alpha > 0, N >= 1, digits >= 15.
// Throws std::runtime_error if a bracket holds no sign change.
EnergySpectrum secular_roots(int N, const Rational& alpha, int digits = kDefaultDigits);

}  // namespace gegenmetric
