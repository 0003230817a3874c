#pragma once

#include "gegenmetric/numeric_matrix.hpp"

#include <vector>

namespace gegenmetric {

struct SymmetricEigen {
  std::vector<Real> values;  // ascending
  Matrix<Real> vectors;      // column k belongs to values[k]; empty unless requested
};

// Cyclic two-sided Jacobi rotations. A pair (p, q) is rotated while
// |m_pq| > eps * sqrt(|m_pp m_qq|), which keeps small eigenvalues of
// graded positive definite matrices accurate in the relative sense.
// Throws PreconditionError unless m.symmetric is set.
SymmetricEigen sym_eigen(const NumericMatrix& m, int digits = kDefaultDigits,
                         bool want_vectors = false);

}  // namespace gegenmetric
