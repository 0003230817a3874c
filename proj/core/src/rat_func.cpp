#include "gegenmetric/rat_func.hpp"

#include "gegenmetric/errors.hpp"

namespace gegenmetric {

namespace {

RatPoly exact_quotient(const RatPoly& p, const RatPoly& d) { return divmod(p, d).first; }

}  // namespace

RatFunc normalize(RatPoly num, RatPoly den) {
  if (den.is_zero()) throw DivisionByZeroError("division by zero polynomial");
  if (num.is_zero()) return RatFunc();
  const RatPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  // Scale the denominator to a primitive integer polynomial with positive
  // leading coefficient and push the factor into the numerator.
  Rational scale = 1 / content(den);
  if (den.leading() < 0) scale = -scale;
  den *= scale;
  num *= scale;
  return RatFunc(std::move(num), std::move(den), 0);
}

Rational RatFunc::operator()(const Rational& a0) const {
  const Rational d = den_(a0);
  if (d == 0) {
    throw PoleError("pole at a = " + gegenmetric::to_string(a0) + ": denominator " +
                    den_.to_string() + " vanishes");
  }
  return num_(a0) / d;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, 0); }

RatFunc& RatFunc::operator+=(const RatFunc& y) {
  if (y.is_zero()) return *this;
  if (is_zero()) return *this = y;
  if (den_ == y.den_) return *this = normalize(num_ + y.num_, den_);
  return *this = normalize(num_ * y.den_ + y.num_ * den_, den_ * y.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& y) { return *this += -y; }

RatFunc& RatFunc::operator*=(const RatFunc& y) {
  if (is_zero() || y.is_zero()) return *this = RatFunc();
  if (is_constant() && y.is_constant()) {
    return *this = RatFunc(num_.coefficient(0) * y.num_.coefficient(0));
  }
  return *this = normalize(num_ * y.num_, den_ * y.den_);
}

RatFunc& RatFunc::operator/=(const RatFunc& y) {
  if (y.is_zero()) throw DivisionByZeroError("division by zero rational function");
  return *this = normalize(num_ * y.den_, den_ * y.num_);
}

RatFunc RatFunc::pow(int exponent) const {
  if (exponent < 0) return RatFunc(1) / pow(-exponent);
  RatFunc result(1);
  for (int i = 0; i < exponent; ++i) result *= *this;
  return result;
}

std::string RatFunc::to_string(const std::string& var) const {
  // Clear numerator denominators so both sides print with integer coefficients.
  Integer scale = 1;
  for (const auto& c : num_.coefficients()) scale = lcm(scale, denominator(c));
  const RatPoly num = num_ * Rational(scale);
  const RatPoly den = den_ * Rational(scale);
  if (den == RatPoly::constant(Rational(1))) return num.to_string(var);

  const auto multi_term = [](const RatPoly& p) {
    int nonzero = 0;
    for (const auto& c : p.coefficients()) nonzero += c != 0;
    return nonzero > 1;
  };
  std::string n = num.to_string(var);
  if (multi_term(num)) n = "(" + n + ")";
  std::string d = den.to_string(var);
  if (den.degree() > 0) d = "(" + d + ")";
  return n + "/" + d;
}

RatFunc arith(ArithOp op, const RatFunc& x, const RatFunc& y) {
  switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div: return x / y;
  }
  return RatFunc();
}

}  // namespace gegenmetric
