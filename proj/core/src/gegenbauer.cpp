#include "gegenmetric/gegenbauer.hpp"

#include "gegenmetric/errors.hpp"

#include <stdexcept>
#include <string>

namespace gegenmetric {

namespace {

template <class T, class Scalar>
T recurrence_eval(int n, const Scalar& alpha, const T& x) {
  if (n < 0) throw PreconditionError("Gegenbauer order must be non-negative");
  T prev(1);
  if (n == 0) return prev;
  T curr = T(2) * T(alpha) * x;
  for (int k = 1; k < n; ++k) {
    T next = (T(2) * x * (T(k) + T(alpha)) * curr - (T(k) + T(2) * T(alpha) - T(1)) * prev) /
             T(k + 1);
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

Real horner(const std::vector<Real>& coeffs, const Real& x) {
  Real acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_of(const Real& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// One root of p in (lo, hi), given p(lo) and p(hi) of opposite sign.
Real refine_root(const std::vector<Real>& p, const std::vector<Real>& dp, Real lo, Real hi,
                 const Real& tol) {
  int s_lo = sign_of(horner(p, lo));
  for (int iter = 0; iter < 4000 && hi - lo > tol; ++iter) {
    Real mid = (lo + hi) / 2;
    const int s_mid = sign_of(horner(p, mid));
    if (s_mid == 0) return mid;
    if (s_mid == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  Real x = (lo + hi) / 2;
  for (int iter = 0; iter < 3; ++iter) {
    const Real d = horner(dp, x);
    if (d == 0) break;
    const Real next = x - horner(p, x) / d;
    if (next <= lo || next >= hi) break;
    x = next;
  }
  return x;
}

}  // namespace

GegenbauerTable gegenbauer_table(int order_max, const Rational& alpha) {
  if (order_max < 0) throw PreconditionError("Gegenbauer order must be non-negative");
  GegenbauerTable table{order_max, alpha, {}};
  table.rows.reserve(static_cast<std::size_t>(order_max) + 1);
  table.rows.push_back(RatPoly::constant(Rational(1)));
  if (order_max == 0) return table;
  table.rows.push_back(RatPoly::monomial(2 * alpha, 1));
  const RatPoly x = RatPoly::x();
  for (int k = 1; k < order_max; ++k) {
    const auto& curr = table.rows[static_cast<std::size_t>(k)];
    const auto& prev = table.rows[static_cast<std::size_t>(k - 1)];
    RatPoly next = x * curr * Rational(2 * (k + alpha)) - prev * Rational(k + 2 * alpha - 1);
    next *= Rational(1, k + 1);
    table.rows.push_back(std::move(next));
  }
  return table;
}

Rational gegenbauer_eval(int n, const Rational& alpha, const Rational& x) {
  return recurrence_eval<Rational>(n, alpha, x);
}

Real gegenbauer_eval(int n, const Real& alpha, const Real& x) {
  return recurrence_eval<Real>(n, alpha, x);
}

RatPoly gegenbauer_coeffs(int n, const Rational& alpha) {
  return gegenbauer_table(n, alpha).rows.back();
}

EnergySpectrum secular_roots(int N, const Rational& alpha, int digits) {
  if (N < 1) throw PreconditionError("N must be at least 1");
  if (alpha <= 0) {
    throw PreconditionError("alpha must be positive for real Gegenbauer roots, got " +
                            to_string(alpha));
  }
  if (digits < kMinDigits) {
    throw PreconditionError("digits must be at least " + std::to_string(kMinDigits));
  }
  PrecisionGuard guard(working_digits(digits));
  const Real tol = pow10_neg(working_digits(digits) - 2);
  const GegenbauerTable table = gegenbauer_table(N, alpha);

  std::vector<Real> previous;  // roots of C_{k-1}
  for (int k = 1; k <= N; ++k) {
    const RatPoly& poly = table.rows[static_cast<std::size_t>(k)];
    std::vector<Real> p;
    std::vector<Real> dp;
    for (const auto& c : poly.coefficients()) p.push_back(to_real(c));
    const RatPoly derivative = poly.derivative();
    for (const auto& c : derivative.coefficients()) dp.push_back(to_real(c));

    std::vector<Real> fences;
    fences.reserve(previous.size() + 2);
    fences.emplace_back(-1);
    fences.insert(fences.end(), previous.begin(), previous.end());
    fences.emplace_back(1);

    std::vector<Real> roots;
    roots.reserve(static_cast<std::size_t>(k));
    for (std::size_t b = 0; b + 1 < fences.size(); ++b) {
      const Real& lo = fences[b];
      const Real& hi = fences[b + 1];
      const int s_lo = sign_of(horner(p, lo));
      const int s_hi = sign_of(horner(p, hi));
      if (s_lo == 0 || s_hi == 0 || s_lo == s_hi) {
        throw std::runtime_error("secular_roots: found " + std::to_string(roots.size()) +
                                 " roots of C_" + std::to_string(k) + " instead of " +
                                 std::to_string(k) + " (alpha = " + to_string(alpha) + ")");
      }
      roots.push_back(refine_root(p, dp, lo, hi, tol));
    }
    // Enforce the exact +-symmetry of the root set.
    for (std::size_t i = 0; i < roots.size() / 2; ++i) {
      const Real r = (roots[roots.size() - 1 - i] - roots[i]) / 2;
      roots[i] = -r;
      roots[roots.size() - 1 - i] = r;
    }
    if (roots.size() % 2 == 1) roots[roots.size() / 2] = 0;
    previous = std::move(roots);
  }
  return EnergySpectrum{N, alpha, std::move(previous), digits};
}

}  // namespace gegenmetric
