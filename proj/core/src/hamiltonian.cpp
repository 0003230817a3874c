#include "gegenmetric/hamiltonian.hpp"

#include "gegenmetric/gegenbauer.hpp"
#include "gegenmetric/symmetric_eigen.hpp"

#include <algorithm>

namespace gegenmetric {

std::string to_string(Convention c) {
  return c == Convention::displayed ? "displayed" : "recurrence";
}

Convention parse_convention(std::string_view text) {
  if (text == "displayed") return Convention::displayed;
  if (text == "recurrence") return Convention::recurrence;
  throw PreconditionError("convention must be 'displayed' or 'recurrence', got '" +
                          std::string(text) + "'");
}

RatFuncMatrix build_hamiltonian(int N, Convention convention) {
  if (N < 1) throw PreconditionError("N must be at least 1");
  const auto n_size = static_cast<std::size_t>(N);
  RatFuncMatrix H = RatFuncMatrix::square(n_size);
  // 2a + c as a polynomial.
  const auto shifted = [](long c) { return RatPoly({Rational(c), Rational(2)}); };
  for (int n = 0; n + 1 < N; ++n) {
    const long numerator = convention == Convention::displayed ? 1 : n + 1;
    H(static_cast<std::size_t>(n), static_cast<std::size_t>(n) + 1) =
        normalize(RatPoly::constant(Rational(numerator)), shifted(2L * n));
  }
  for (int n = 1; n < N; ++n) {
    H(static_cast<std::size_t>(n), static_cast<std::size_t>(n) - 1) =
        normalize(shifted(n - 1L), shifted(2L * n));
  }
  return H;
}

NumericMatrix instantiate_hamiltonian(const RatFuncMatrix& H, const Rational& a0, int digits,
                                      bool allow_nonpositive_coupling) {
  if (a0 <= 0 && !allow_nonpositive_coupling) {
    throw PreconditionError("coupling a must be positive, got " + to_string(a0));
  }
  return instantiate(H, a0, digits);
}

NumericMatrix symmetrize_tridiagonal(const NumericMatrix& H) {
  const std::size_t n = H.size();
  PrecisionGuard guard(working_digits(H.digits));
  Matrix<Real> s(n, n, Real(0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Real product = H.entries(i, i + 1) * H.entries(i + 1, i);
    if (product <= 0) {
      throw PreconditionError("symmetrize_tridiagonal: off-diagonal pair " + std::to_string(i) +
                              " has nonpositive product");
    }
    s(i, i + 1) = sqrt(product);
    s(i + 1, i) = s(i, i + 1);
  }
  for (std::size_t i = 0; i < n; ++i) s(i, i) = H.entries(i, i);
  return NumericMatrix{std::move(s), true, H.digits};
}

EigensystemReport verify_eigensystem(int N, const Rational& alpha, Convention convention,
                                     int digits) {
  const EnergySpectrum spectrum = secular_roots(N, alpha, digits);
  const NumericMatrix H = instantiate_hamiltonian(build_hamiltonian(N, convention), alpha, digits);
  const auto n = static_cast<std::size_t>(N);

  PrecisionGuard guard(working_digits(digits));
  EigensystemReport report;
  report.N = N;
  report.alpha = alpha;
  report.convention = convention;
  report.digits = digits;
  report.gegenbauer_roots = spectrum.roots;
  report.max_residual = 0;

  const Real alpha_real = to_real(alpha);
  for (const Real& energy : spectrum.roots) {
    std::vector<Real> psi(n);
    for (std::size_t k = 0; k < n; ++k) {
      psi[k] = gegenbauer_eval(static_cast<int>(k), alpha_real, energy);
    }
    Real worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Real row = -energy * psi[i];
      for (std::size_t j = 0; j < n; ++j) row += H.entries(i, j) * psi[j];
      worst = std::max(worst, Real(abs(row)));
    }
    report.residuals.push_back(worst);
    report.max_residual = std::max(report.max_residual, worst);
  }

  report.matrix_eigenvalues = sym_eigen(symmetrize_tridiagonal(H), digits).values;
  report.spectral_gap = 0;
  for (std::size_t k = 0; k < n; ++k) {
    report.spectral_gap =
        std::max(report.spectral_gap,
                 Real(abs(report.matrix_eigenvalues[k] - report.gegenbauer_roots[k])));
  }
  return report;
}

}  // namespace gegenmetric
