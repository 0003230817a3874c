#pragma once

#include "gegenmetric/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace gegenmetric {

using Real = boost::multiprecision::mpfr_float;

inline constexpr int kDefaultDigits = 50;
inline constexpr int kMinDigits = 15;
// Extra decimal digits carried internally by every numeric routine.
inline constexpr int kGuardDigits = 10;

// Sets the MPFR default precision for the lifetime of the guard.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(int digits10)
      : saved_(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(digits10));
  }
  ~PrecisionGuard() { Real::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

inline int working_digits(int digits) { return digits + kGuardDigits; }

Real to_real(const Rational& value);

// Scientific notation with `digits` significant digits.
std::string format_real(const Real& value, int digits);

// 10^(-exponent) at the current precision.
Real pow10_neg(int exponent);

}  // namespace gegenmetric
