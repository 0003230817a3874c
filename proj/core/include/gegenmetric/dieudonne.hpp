#pragma once

#include "gegenmetric/hamiltonian.hpp"
#include "gegenmetric/linear_form.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gegenmetric {

// Symmetric metric candidate whose entries are affine in named parameters.
using SymbolicMatrix = Matrix<LinearForm>;

// Upper-triangle equations M_ij = (H^T Theta - Theta H)_ij, i < j, 1-based,
// ordered by anti-diagonal j - i descending from N-1, rows ascending:
// (1,N); (1,N-1),(2,N); ...; (1,2),...,(N-1,N).
struct EquationOrdering {
  int N = 0;
  std::vector<std::pair<int, int>> sequence;
};

EquationOrdering order_equations(int N);

// One elimination step: equation M_ij fixed the element `unknown`.
// `undetermined_referenced` counts the not-yet-known elements the equation
// touched (with nonzero coefficient) and is 1 on every successful step.
struct EliminationStep {
  std::pair<int, int> equation;
  std::pair<int, int> unknown;
  int undetermined_referenced = 0;
};
using EliminationTrace = std::vector<EliminationStep>;

// Solves H^T Theta = Theta H for the symmetric Theta whose first row is
// given, walking the equations in order_equations() order; each equation
// must introduce exactly one new element, eliminated by exact division.
// Throws DegeneratePivotError otherwise.
SymbolicMatrix solve_metric(const RatFuncMatrix& H, const std::vector<LinearForm>& first_row,
                            EliminationTrace* trace = nullptr);
SymbolicMatrix solve_metric(int N, Convention convention,
                            const std::vector<LinearForm>& first_row,
                            EliminationTrace* trace = nullptr);

// Parameter-free variants.
RatFuncMatrix solve_metric(const RatFuncMatrix& H, const std::vector<RatFunc>& first_row,
                           EliminationTrace* trace = nullptr);
// The same elimination carried out at a fixed coupling.
RationalMatrix solve_metric(const RationalMatrix& H, const std::vector<Rational>& first_row,
                            EliminationTrace* trace = nullptr);

// Theta = sum_j kappa_j P_j, where P_j is the solution with first row e_j.
struct MetricSolution {
  int N = 0;
  Convention convention = Convention::displayed;
  std::vector<RatFuncMatrix> basis;
  std::vector<std::string> parameter_names;  // theta_1_1 ... theta_1_N

  SymbolicMatrix combine(const std::vector<LinearForm>& kappa) const;
  // Exact basis matrices at a0.
  std::vector<RationalMatrix> at(const Rational& a0) const;
};

MetricSolution pseudometric_basis(int N, Convention convention = Convention::displayed);

// sum_j kappa_j B_j for exact matrices of equal size.
RationalMatrix combine(const std::vector<RationalMatrix>& basis,
                       const std::vector<Rational>& kappa);

// H^T Theta - Theta H, exactly.
RatFuncMatrix residual(const RatFuncMatrix& H, const RatFuncMatrix& theta);
SymbolicMatrix residual(const RatFuncMatrix& H, const SymbolicMatrix& theta);

// Exact nullspace of the N(N+1)/2-unknown linear system H^T Theta = Theta H
// at a = a0 over symmetric Theta, by fraction-free elimination.
struct NullspaceResult {
  int dimension = 0;
  std::vector<RationalMatrix> basis;
};

NullspaceResult nullspace_oracle(int N, Convention convention, const Rational& a0);

// Upper triangle (row-major, including the diagonal) of a square matrix.
std::vector<Rational> upper_triangle(const RationalMatrix& m);

}  // namespace gegenmetric
