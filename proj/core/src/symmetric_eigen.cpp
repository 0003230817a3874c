#include "gegenmetric/symmetric_eigen.hpp"

#include <algorithm>
#include <numeric>

namespace gegenmetric {

SymmetricEigen sym_eigen(const NumericMatrix& m, int digits, bool want_vectors) {
  if (!m.symmetric || !m.entries.is_square()) {
    throw PreconditionError("sym_eigen: input matrix is not flagged symmetric");
  }
  const int wd = working_digits(digits);
  PrecisionGuard guard(wd);
  const std::size_t n = m.size();
  Matrix<Real> a = m.entries.map([wd](const Real& v) { return Real(v, static_cast<unsigned>(wd)); });
  Matrix<Real> v = want_vectors ? Matrix<Real>::identity(n) : Matrix<Real>();

  const Real eps = pow10_neg(wd - 2);
  Real frobenius = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) frobenius += a(i, j) * a(i, j);
  frobenius = sqrt(frobenius);
  const Real floor = frobenius * pow10_neg(2 * wd);

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Real apq = a(p, q);
        const Real mag = abs(apq);
        if (mag <= floor || mag <= eps * sqrt(abs(a(p, p) * a(q, q)))) continue;
        rotated = true;
        const Real theta = (a(q, q) - a(p, p)) / (2 * apq);
        Real t = 1 / (abs(theta) + sqrt(theta * theta + 1));
        if (theta < 0) t = -t;
        const Real c = 1 / sqrt(t * t + 1);
        const Real s = t * c;
        const Real tau = s / (1 + c);
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0;
        a(q, p) = 0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const Real g = a(r, p);
          const Real h = a(r, q);
          a(r, p) = g - s * (h + g * tau);
          a(p, r) = a(r, p);
          a(r, q) = h + s * (g - h * tau);
          a(q, r) = a(r, q);
        }
        if (want_vectors) {
          for (std::size_t r = 0; r < n; ++r) {
            const Real g = v(r, p);
            const Real h = v(r, q);
            v(r, p) = g - s * (h + g * tau);
            v(r, q) = h + s * (g - h * tau);
          }
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&a](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  SymmetricEigen out;
  out.values.reserve(n);
  for (std::size_t k : order) out.values.push_back(a(k, k));
  if (want_vectors) {
    out.vectors = Matrix<Real>(n, n);
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t r = 0; r < n; ++r) out.vectors(r, col) = v(r, order[col]);
  }
  return out;
}

}  // namespace gegenmetric
