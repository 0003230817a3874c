#include "gegenmetric/exact_linalg.hpp"

#include <stdexcept>

namespace gegenmetric {

EchelonForm fraction_free_echelon(const RationalMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Matrix<Integer> w(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    Integer scale = 1;
    for (std::size_t j = 0; j < n; ++j) scale = lcm(scale, denominator(a(i, j)));
    for (std::size_t j = 0; j < n; ++j) {
      w(i, j) = numerator(a(i, j)) * (scale / denominator(a(i, j)));
    }
  }

  EchelonForm out;
  Integer previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t pivot = r;
    while (pivot < m && w(pivot, c) == 0) ++pivot;
    if (pivot == m) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(r, j), w(pivot, j));
    }
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Integer numer = w(r, c) * w(i, j) - w(i, c) * w(r, j);
        Integer quotient = numer / previous;
        if (quotient * previous != numer) {
          throw std::logic_error("fraction_free_echelon: inexact Bareiss division");
        }
        w(i, j) = std::move(quotient);
      }
      w(i, c) = 0;
    }
    previous = w(r, c);
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rows = std::move(w);
  return out;
}

std::size_t rank(const RationalMatrix& a) { return fraction_free_echelon(a).rank(); }

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a) {
  const EchelonForm e = fraction_free_echelon(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(n, Rational(0));
    x[free] = 1;
    for (std::size_t k = e.rank(); k-- > 0;) {
      const std::size_t c = e.pivot_columns[k];
      Rational acc = 0;
      for (std::size_t j = c + 1; j < n; ++j) {
        if (x[j] != 0) acc += Rational(e.rows(k, j)) * x[j];
      }
      x[c] = -acc / Rational(e.rows(k, c));
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Rational determinant(const RationalMatrix& a) {
  if (!a.is_square()) throw PreconditionError("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return Rational(1);
  Matrix<Rational> w = a;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && w(pivot, c) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(c, j), w(pivot, j));
      det = -det;
    }
    det *= w(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (w(i, c) == 0) continue;
      const Rational factor = w(i, c) / w(c, c);
      for (std::size_t j = c; j < n; ++j) w(i, j) -= factor * w(c, j);
    }
  }
  return det;
}

RationalMatrix stack_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return RationalMatrix();
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw PreconditionError("stack_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool same_span(const std::vector<std::vector<Rational>>& a,
               const std::vector<std::vector<Rational>>& b) {
  std::vector<std::vector<Rational>> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t ra = a.empty() ? 0 : rank(stack_rows(a));
  const std::size_t rb = b.empty() ? 0 : rank(stack_rows(b));
  const std::size_t rab = both.empty() ? 0 : rank(stack_rows(both));
  return ra == rb && rb == rab;
}

}  // namespace gegenmetric
