#include "gegenmetric/dieudonne.hpp"

#include "gegenmetric/exact_linalg.hpp"

#include <set>

namespace gegenmetric {

namespace {

// Theta entries are coefficient vectors over a fixed set of symbols.
template <class F>
using Coeffs = std::vector<F>;

template <class F>
void axpy(Coeffs<F>& y, const F& alpha, const Coeffs<F>& x) {
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (!is_zero(x[k])) y[k] += alpha * x[k];
  }
}

template <class F>
Matrix<Coeffs<F>> eliminate(const Matrix<F>& H, const std::vector<Coeffs<F>>& first_row,
                            EliminationTrace* trace) {
  if (!H.is_square()) throw PreconditionError("solve_metric: Hamiltonian is not square");
  const std::size_t n = H.rows();
  if (first_row.size() != n) {
    throw PreconditionError("solve_metric: first row has " + std::to_string(first_row.size()) +
                            " entries, expected " + std::to_string(n));
  }
  const std::size_t width = n ? first_row.front().size() : 0;
  Matrix<Coeffs<F>> theta(n, n);
  Matrix<char> known(n, n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    theta(0, j) = first_row[j];
    theta(j, 0) = first_row[j];
    known(0, j) = known(j, 0) = 1;
  }
  if (trace) trace->clear();
  if (n < 2) return theta;

  for (const auto& [row1, col1] : order_equations(static_cast<int>(n)).sequence) {
    const auto i = static_cast<std::size_t>(row1 - 1);
    const auto j = static_cast<std::size_t>(col1 - 1);
    // M_ij = sum_k H_ki Theta_kj - sum_k Theta_ik H_kj, over unordered pairs.
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, F>> terms;
    const auto add = [&terms](std::size_t p, std::size_t q, const F& c) {
      if (p > q) std::swap(p, q);
      for (auto& [key, coef] : terms) {
        if (key.first == p && key.second == q) {
          coef += c;
          return;
        }
      }
      terms.push_back({{p, q}, c});
    };
    for (std::size_t k = 0; k < n; ++k) {
      if (!is_zero(H(k, i))) add(k, j, H(k, i));
      if (!is_zero(H(k, j))) add(i, k, F(-H(k, j)));
    }

    int undetermined = 0;
    std::pair<std::size_t, std::size_t> target{};
    F pivot{};
    for (const auto& [key, coef] : terms) {
      if (is_zero(coef) || known(key.first, key.second)) continue;
      ++undetermined;
      target = key;
      pivot = coef;
    }
    if (undetermined != 1) {
      throw DegeneratePivotError("degenerate pivot: equation M(" + std::to_string(row1) + "," +
                                 std::to_string(col1) + ") references " +
                                 std::to_string(undetermined) + " undetermined elements");
    }

    Coeffs<F> rhs(width, F(0));
    for (const auto& [key, coef] : terms) {
      if (key == target || is_zero(coef)) continue;
      axpy(rhs, coef, theta(key.first, key.second));
    }
    const F scale = F(-1) / pivot;
    for (auto& v : rhs) {
      if (!is_zero(v)) v *= scale;
    }
    theta(target.first, target.second) = rhs;
    theta(target.second, target.first) = std::move(rhs);
    known(target.first, target.second) = known(target.second, target.first) = 1;
    if (trace) {
      trace->push_back({{row1, col1},
                        {static_cast<int>(target.first) + 1, static_cast<int>(target.second) + 1},
                        undetermined});
    }
  }
  return theta;
}

template <class F>
Matrix<F> solve_scalar(const Matrix<F>& H, const std::vector<F>& first_row,
                       EliminationTrace* trace) {
  std::vector<Coeffs<F>> row;
  row.reserve(first_row.size());
  for (const auto& v : first_row) row.push_back({v});
  return eliminate<F>(H, row, trace).map([](const Coeffs<F>& c) { return c.front(); });
}

}  // namespace

EquationOrdering order_equations(int N) {
  if (N < 2) throw PreconditionError("order_equations: N must be at least 2");
  EquationOrdering out{N, {}};
  out.sequence.reserve(static_cast<std::size_t>(N * (N - 1) / 2));
  for (int distance = N - 1; distance >= 1; --distance) {
    for (int i = 1; i + distance <= N; ++i) out.sequence.emplace_back(i, i + distance);
  }
  return out;
}

SymbolicMatrix solve_metric(const RatFuncMatrix& H, const std::vector<LinearForm>& first_row,
                            EliminationTrace* trace) {
  // Symbol 0 is the constant term, then parameters in name order.
  std::set<std::string> names;
  for (const auto& f : first_row)
    for (const auto& [name, c] : f.terms()) names.insert(name);
  const std::vector<std::string> symbols(names.begin(), names.end());

  std::vector<Coeffs<RatFunc>> row;
  row.reserve(first_row.size());
  for (const auto& f : first_row) {
    Coeffs<RatFunc> c(symbols.size() + 1);
    c[0] = f.constant();
    for (std::size_t s = 0; s < symbols.size(); ++s) c[s + 1] = f.coefficient(symbols[s]);
    row.push_back(std::move(c));
  }
  return eliminate<RatFunc>(H, row, trace).map([&symbols](const Coeffs<RatFunc>& c) {
    LinearForm f(c[0]);
    for (std::size_t s = 0; s < symbols.size(); ++s) f += LinearForm::parameter(symbols[s], c[s + 1]);
    return f;
  });
}

SymbolicMatrix solve_metric(int N, Convention convention,
                            const std::vector<LinearForm>& first_row, EliminationTrace* trace) {
  return solve_metric(build_hamiltonian(N, convention), first_row, trace);
}

RatFuncMatrix solve_metric(const RatFuncMatrix& H, const std::vector<RatFunc>& first_row,
                           EliminationTrace* trace) {
  return solve_scalar<RatFunc>(H, first_row, trace);
}

RationalMatrix solve_metric(const RationalMatrix& H, const std::vector<Rational>& first_row,
                            EliminationTrace* trace) {
  return solve_scalar<Rational>(H, first_row, trace);
}

SymbolicMatrix MetricSolution::combine(const std::vector<LinearForm>& kappa) const {
  if (kappa.size() != basis.size()) {
    throw PreconditionError("combine: expected " + std::to_string(basis.size()) +
                            " coefficients");
  }
  const auto n = static_cast<std::size_t>(N);
  SymbolicMatrix out(n, n);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!basis[b](i, j).is_zero()) out(i, j) += kappa[b] * basis[b](i, j);
      }
  }
  return out;
}

std::vector<RationalMatrix> MetricSolution::at(const Rational& a0) const {
  std::vector<RationalMatrix> out;
  out.reserve(basis.size());
  for (const auto& p : basis) out.push_back(evaluate(p, a0));
  return out;
}

MetricSolution pseudometric_basis(int N, Convention convention) {
  const RatFuncMatrix H = build_hamiltonian(N, convention);
  MetricSolution out;
  out.N = N;
  out.convention = convention;
  const auto n = static_cast<std::size_t>(N);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<RatFunc> unit(n, RatFunc());
    unit[j] = RatFunc(1);
    out.basis.push_back(solve_metric(H, unit));
    out.parameter_names.push_back("theta_1_" + std::to_string(j + 1));
  }
  return out;
}

RationalMatrix combine(const std::vector<RationalMatrix>& basis,
                       const std::vector<Rational>& kappa) {
  if (basis.empty() || kappa.size() != basis.size()) {
    throw PreconditionError("combine: coefficient count does not match basis size");
  }
  RationalMatrix out(basis.front().rows(), basis.front().cols(), Rational(0));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (kappa[b] == 0) continue;
    for (std::size_t i = 0; i < out.rows(); ++i)
      for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) += kappa[b] * basis[b](i, j);
  }
  return out;
}

RatFuncMatrix residual(const RatFuncMatrix& H, const RatFuncMatrix& theta) {
  if (!H.is_square() || H.rows() != theta.rows() || theta.rows() != theta.cols()) {
    throw PreconditionError("residual: dimension mismatch");
  }
  return H.transpose() * theta - theta * H;
}

SymbolicMatrix residual(const RatFuncMatrix& H, const SymbolicMatrix& theta) {
  if (!H.is_square() || H.rows() != theta.rows() || theta.rows() != theta.cols()) {
    throw PreconditionError("residual: dimension mismatch");
  }
  const std::size_t n = H.rows();
  SymbolicMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!H(k, i).is_zero()) out(i, j) += theta(k, j) * H(k, i);
        if (!H(k, j).is_zero()) out(i, j) -= theta(i, k) * H(k, j);
      }
  return out;
}

std::vector<Rational> upper_triangle(const RationalMatrix& m) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

NullspaceResult nullspace_oracle(int N, Convention convention, const Rational& a0) {
  if (a0 <= 0) throw PreconditionError("nullspace_oracle: a0 must be positive");
  const RationalMatrix H = evaluate(build_hamiltonian(N, convention), a0);
  const auto n = static_cast<std::size_t>(N);

  // Column index of the unknown Theta_pq, p <= q.
  std::vector<std::vector<std::size_t>> column(n, std::vector<std::size_t>(n));
  std::size_t unknowns = 0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q) column[p][q] = column[q][p] = unknowns++;

  RationalMatrix system(n * n, unknowns, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        system(row, column[k][j]) += H(k, i);
        system(row, column[i][k]) -= H(k, j);
      }
    }

  NullspaceResult out;
  for (const auto& v : nullspace(system)) {
    RationalMatrix theta(n, n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p; q < n; ++q) theta(p, q) = theta(q, p) = v[column[p][q]];
    out.basis.push_back(std::move(theta));
  }
  out.dimension = static_cast<int>(out.basis.size());
  return out;
}

}  // namespace gegenmetric
