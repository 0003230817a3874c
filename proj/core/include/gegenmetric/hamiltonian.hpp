#pragma once

#include "gegenmetric/numeric_matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gegenmetric {

// Superdiagonal convention of the Gegenbauer lattice Hamiltonian.
//   displayed:  H[n][n+1] = 1/(2a+2n)
//   recurrence: H[n][n+1] = (n+1)/(2a+2n)
// Both use H[n][n-1] = (2a+n-1)/(2a+2n) and a zero diagonal. Only the
// recurrence form has the Gegenbauer vectors as exact eigenvectors for
// N >= 3; the displayed form is the one the printed metrics solve.
enum class Convention { displayed, recurrence };

std::string to_string(Convention c);
// Throws PreconditionError for anything but "displayed" / "recurrence".
Convention parse_convention(std::string_view text);

// Tridiagonal N x N Hamiltonian with rational-function entries in a.
RatFuncMatrix build_hamiltonian(int N, Convention convention = Convention::displayed);

// Numeric H at a0. Rejects a0 <= 0 unless allow_nonpositive_coupling.
NumericMatrix instantiate_hamiltonian(const RatFuncMatrix& H, const Rational& a0,
                                      int digits = kDefaultDigits,
                                      bool allow_nonpositive_coupling = false);

// D H D^-1 with D positive diagonal: the symmetric tridiagonal matrix with
// off-diagonal sqrt(H[i][i+1] H[i+1][i]). Requires every paired product to
// be positive.
NumericMatrix symmetrize_tridiagonal(const NumericMatrix& H);

struct EigensystemReport {
  int N = 0;
  Rational alpha;
  Convention convention = Convention::displayed;
  int digits = kDefaultDigits;
  std::vector<Real> gegenbauer_roots;    // secular equation roots
  std::vector<Real> matrix_eigenvalues;  // numeric spectrum of H, ascending
  std::vector<Real> residuals;           // ||H psi_n - E_n psi_n||_inf per root
  Real max_residual;
  Real spectral_gap;                     // max_n |lambda_n(H) - E_n|
};

// Checks H psi_n = E_n psi_n with psi_n[k] = C_k^(alpha)(E_n), E_n from
// secular_roots, and compares the numeric spectrum of H with the roots.
EigensystemReport verify_eigensystem(int N, const Rational& alpha, Convention convention,
                                     int digits = kDefaultDigits);

}  // namespace gegenmetric
