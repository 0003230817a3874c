#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace gegenmetric {

// Exact rational scalar. GMP keeps it reduced with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Accepts "p", "p/q", and plain decimals such as "-0.125" or "1.5e-3".
// Throws PreconditionError on anything else.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return value == 0; }

}  // namespace gegenmetric
