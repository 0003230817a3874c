#pragma once

#include "gegenmetric/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace gegenmetric {

// Univariate polynomial over the rationals, coefficients in ascending degree.
// Trailing zeros are never stored; the zero polynomial has no coefficients
// and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coefficients);
  RatPoly(std::initializer_list<Rational> coefficients);
  // Constant polynomial.
  static RatPoly constant(const Rational& c);
  // c * x^power.
  static RatPoly monomial(const Rational& c, int power);
  // The indeterminate x.
  static RatPoly x() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  // Coefficient of x^k, zero beyond the degree.
  Rational coefficient(int k) const;
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  template <class T>
  T evaluate(const T& x) const;

  RatPoly operator-() const;
  RatPoly& operator+=(const RatPoly& other);
  RatPoly& operator-=(const RatPoly& other);
  RatPoly& operator*=(const RatPoly& other);
  RatPoly& operator*=(const Rational& c);

  friend RatPoly operator+(RatPoly lhs, const RatPoly& rhs) { return lhs += rhs; }
  friend RatPoly operator-(RatPoly lhs, const RatPoly& rhs) { return lhs -= rhs; }
  friend RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs);
  friend RatPoly operator*(RatPoly lhs, const Rational& c) { return lhs *= c; }
  friend RatPoly operator*(const Rational& c, RatPoly rhs) { return rhs *= c; }
  friend bool operator==(const RatPoly&, const RatPoly&) = default;

  RatPoly derivative() const;
  // Same polynomial divided by its leading coefficient; zero stays zero.
  RatPoly monic() const;

  // Integer-coefficient ascending-power rendering in `var`, e.g. "1+2*a^2".
  // Requires integer coefficients to print without fractions; rational
  // coefficients are printed as "(p/q)*a^k".
  std::string to_string(const std::string& var = "a") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Euclidean division: returns (quotient, remainder). Throws
// DivisionByZeroError when the divisor is zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& dividend, const RatPoly& divisor);

// Monic greatest common divisor; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& p, const RatPoly& q);

// Least common multiple of the coefficient denominators and gcd of the
// scaled numerators: p = (content_num/content_den) * primitive integer poly.
Rational content(const RatPoly& p);

template <class T>
T RatPoly::evaluate(const T& x) const {
  T acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + T(*it);
  }
  return acc;
}

}  // namespace gegenmetric
