#pragma once

#include "gegenmetric/matrix.hpp"
#include "gegenmetric/rat_func.hpp"
#include "gegenmetric/real.hpp"

#include <string>

namespace gegenmetric {

using RatFuncMatrix = Matrix<RatFunc>;
using RationalMatrix = Matrix<Rational>;

// High-precision instantiation of a matrix. `symmetric` is set only by an
// exact test on the source (RatFunc or Rational) entries, so consumers can
// rely on entries(i, j) == entries(j, i) when it is true.
struct NumericMatrix {
  Matrix<Real> entries;
  bool symmetric = false;
  int digits = kDefaultDigits;

  std::size_t size() const { return entries.rows(); }
};

// Exact value of every entry at a0. Throws PoleError naming the entry.
RationalMatrix evaluate(const RatFuncMatrix& m, const Rational& a0);

NumericMatrix to_numeric(const RationalMatrix& m, int digits = kDefaultDigits);

// Entrywise evaluation at a0; symmetric flag from the RatFunc entries.
NumericMatrix instantiate(const RatFuncMatrix& m, const Rational& a0, int digits = kDefaultDigits);

// Marks a numerically computed square matrix as symmetric after averaging
// it with its transpose.
NumericMatrix symmetrized(const Matrix<Real>& m, int digits);

std::string render(const RatFuncMatrix& m, const std::string& var = "a");

}  // namespace gegenmetric
