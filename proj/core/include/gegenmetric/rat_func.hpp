#pragma once

#include "gegenmetric/rat_poly.hpp"

#include <string>

namespace gegenmetric {

// Reduced quotient num/den of polynomials in the coupling a.
//
// Canonical form: gcd(num, den) = 1, den is a primitive integer polynomial
// with positive leading coefficient, all rational content sits in num, and
// zero is 0/1. Two RatFunc values are equal iff their fields are equal.
class RatFunc {
 public:
  RatFunc() : num_(), den_(RatPoly::constant(Rational(1))) {}
  RatFunc(const Rational& c)  // NOLINT: implicit scalar embedding
      : num_(RatPoly::constant(c)), den_(RatPoly::constant(Rational(1))) {}
  RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT
  explicit RatFunc(RatPoly p)
      : num_(std::move(p)), den_(RatPoly::constant(Rational(1))) {}

  // The coupling symbol a.
  static RatFunc variable() { return RatFunc(RatPoly::x()); }

  const RatPoly& num() const { return num_; }
  const RatPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  // Exact value at a0. Throws PoleError if den(a0) = 0.
  Rational operator()(const Rational& a0) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& y);
  RatFunc& operator-=(const RatFunc& y);
  RatFunc& operator*=(const RatFunc& y);
  RatFunc& operator/=(const RatFunc& y);

  friend RatFunc operator+(RatFunc x, const RatFunc& y) { return x += y; }
  friend RatFunc operator-(RatFunc x, const RatFunc& y) { return x -= y; }
  friend RatFunc operator*(RatFunc x, const RatFunc& y) { return x *= y; }
  friend RatFunc operator/(RatFunc x, const RatFunc& y) { return x /= y; }
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  RatFunc pow(int exponent) const;

  // Canonical text, e.g. "(1+a)/(2*a)", "-1/(4+2*a)", "1+a", "0".
  std::string to_string(const std::string& var = "a") const;

  friend RatFunc normalize(RatPoly num, RatPoly den);

 private:
  RatFunc(RatPoly num, RatPoly den, int /*already canonical*/)
      : num_(std::move(num)), den_(std::move(den)) {}
  RatPoly num_;
  RatPoly den_;
};

// Canonical reduced form of num/den. Throws DivisionByZeroError
// ("division by zero polynomial") when den is zero.
RatFunc normalize(RatPoly num, RatPoly den);

enum class ArithOp { add, sub, mul, div };
RatFunc arith(ArithOp op, const RatFunc& x, const RatFunc& y);

inline Rational eval(const RatFunc& f, const Rational& a0) { return f(a0); }

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

}  // namespace gegenmetric
