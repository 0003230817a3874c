#include "gegenmetric/numeric_matrix.hpp"

namespace gegenmetric {

RationalMatrix evaluate(const RatFuncMatrix& m, const Rational& a0) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      try {
        out(i, j) = m(i, j)(a0);
      } catch (const PoleError& e) {
        throw PoleError("entry [" + std::to_string(i) + "][" + std::to_string(j) +
                        "]: " + e.what());
      }
    }
  }
  return out;
}

NumericMatrix to_numeric(const RationalMatrix& m, int digits) {
  PrecisionGuard guard(working_digits(digits));
  return NumericMatrix{m.map([](const Rational& q) { return to_real(q); }), m.is_symmetric(),
                       digits};
}

NumericMatrix instantiate(const RatFuncMatrix& m, const Rational& a0, int digits) {
  NumericMatrix out = to_numeric(evaluate(m, a0), digits);
  out.symmetric = m.is_symmetric();
  return out;
}

NumericMatrix symmetrized(const Matrix<Real>& m, int digits) {
  if (!m.is_square()) throw PreconditionError("symmetrized: matrix is not square");
  PrecisionGuard guard(working_digits(digits));
  Matrix<Real> s = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      const Real v = (m(i, j) + m(j, i)) / 2;
      s(i, j) = v;
      s(j, i) = v;
    }
  return NumericMatrix{std::move(s), true, digits};
}

std::string render(const RatFuncMatrix& m, const std::string& var) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += m(i, j).to_string(var);
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace gegenmetric
