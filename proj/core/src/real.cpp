#include "gegenmetric/real.hpp"

namespace gegenmetric {

Real to_real(const Rational& value) {
  return Real(Real(numerator(value)) / Real(denominator(value)));
}

std::string format_real(const Real& value, int digits) {
  if (value == 0) return "0";
  return value.str(digits, std::ios_base::scientific);
}

Real pow10_neg(int exponent) { return boost::multiprecision::pow(Real(10), -exponent); }

}  // namespace gegenmetric
