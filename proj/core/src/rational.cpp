#include "gegenmetric/rational.hpp"

#include "gegenmetric/errors.hpp"

#include <regex>

namespace gegenmetric {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer pow10(long n) {
  Integer r = 1;
  for (long i = 0; i < n; ++i) r *= 10;
  return r;
}

// Base-10 digits with optional sign; GMP would read a leading 0 as octal.
Integer decimal_integer(const std::string& digits) {
  std::size_t start = (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) ? 1 : 0;
  const bool negative = start == 1 && digits[0] == '-';
  while (start + 1 < digits.size() && digits[start] == '0') ++start;
  const Integer magnitude(digits.substr(start));
  return negative ? Integer(-magnitude) : magnitude;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  static const std::regex kFraction(R"(([+-]?\d+)\s*/\s*([+-]?\d+))");
  static const std::regex kDecimal(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?)");

  const std::string s(trim(text));
  std::smatch m;
  if (std::regex_match(s, m, kFraction)) {
    const Integer p = decimal_integer(m[1].str());
    const Integer q = decimal_integer(m[2].str());
    if (q == 0) throw PreconditionError("rational '" + s + "' has zero denominator");
    return Rational(p, q);
  }
  if (std::regex_match(s, m, kDecimal) && (m[2].length() > 0 || m[3].length() > 0)) {
    const std::string int_part = m[2].length() > 0 ? m[2].str() : "0";
    const std::string frac_part = m[3].str();
    const Integer mantissa = decimal_integer(int_part + frac_part);
    long exponent = -static_cast<long>(frac_part.size());
    if (m[4].matched) exponent += std::stol(m[4].str());
    Rational r = exponent >= 0 ? Rational(mantissa * pow10(exponent))
                               : Rational(mantissa, pow10(-exponent));
    return m[1].str() == "-" ? Rational(-r) : r;
  }
  throw PreconditionError("cannot parse '" + s + "' as a rational number");
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace gegenmetric
