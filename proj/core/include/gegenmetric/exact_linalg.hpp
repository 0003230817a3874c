#pragma once

#include "gegenmetric/numeric_matrix.hpp"

#include <vector>

namespace gegenmetric {

// Row echelon form by fraction-free (Bareiss) elimination on the
// integer-scaled rows of A. Every stored entry is an integer minor of A.
struct EchelonForm {
  Matrix<Integer> rows;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

EchelonForm fraction_free_echelon(const RationalMatrix& a);

std::size_t rank(const RationalMatrix& a);

// Basis of {x : A x = 0}; one vector per free column, with that free
// variable set to 1 and the others to 0.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a);

Rational determinant(const RationalMatrix& a);

// Rows stacked into a matrix.
RationalMatrix stack_rows(const std::vector<std::vector<Rational>>& rows);

// True iff the two families span the same subspace (mutual containment).
bool same_span(const std::vector<std::vector<Rational>>& a,
               const std::vector<std::vector<Rational>>& b);

}  // namespace gegenmetric
