#pragma once

#include "gegenmetric/rat_func.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gegenmetric {

// c_0(a) + sum_p c_p(a) * p, affine in named free parameters p with
// rational-function coefficients. Zero coefficients are never stored.
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(RatFunc constant) : constant_(std::move(constant)) {}  // NOLINT
  LinearForm(const Rational& c) : constant_(c) {}                  // NOLINT
  static LinearForm parameter(const std::string& name, RatFunc coefficient = RatFunc(1));

  const RatFunc& constant() const { return constant_; }
  const std::map<std::string, RatFunc>& terms() const { return terms_; }
  RatFunc coefficient(const std::string& name) const;
  bool is_constant() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty() && constant_.is_zero(); }

  LinearForm operator-() const;
  LinearForm& operator+=(const LinearForm& y);
  LinearForm& operator-=(const LinearForm& y);
  LinearForm& operator*=(const RatFunc& s);
  LinearForm& operator/=(const RatFunc& s);

  friend LinearForm operator+(LinearForm x, const LinearForm& y) { return x += y; }
  friend LinearForm operator-(LinearForm x, const LinearForm& y) { return x -= y; }
  friend LinearForm operator*(LinearForm x, const RatFunc& s) { return x *= s; }
  friend LinearForm operator*(const RatFunc& s, LinearForm x) { return x *= s; }
  friend LinearForm operator/(LinearForm x, const RatFunc& s) { return x /= s; }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;

  // Substitute rational values for parameters (missing ones count as zero)
  // and the coupling a0; throws PoleError on a pole.
  Rational evaluate(const Rational& a0, const std::map<std::string, Rational>& values) const;

  // "(1+a)/(4*a+2*a^2)*c" style; constant first, then parameters by name.
  std::string to_string(const std::string& var = "a") const;

 private:
  RatFunc constant_;
  std::map<std::string, RatFunc> terms_;
};

// Parses an expression over the coupling `var`, integer or decimal
// literals, + - * / ^ (non-negative integer exponents) and parentheses.
// Any other identifier is a free parameter; the result must be affine in
// the parameters. If `allowed` is non-empty, unknown identifiers are
// rejected. Throws PreconditionError on malformed or nonlinear input.
LinearForm parse_linear_form(std::string_view text, const std::vector<std::string>& allowed = {},
                             const std::string& var = "a");

// Parses a parameter-free expression. Throws if a parameter appears.
RatFunc parse_rat_func(std::string_view text, const std::string& var = "a");

// Splits on top-level commas ("k,b,2*a^2" -> {"k","b","2*a^2"}).
std::vector<std::string> split_top_level(std::string_view text, char sep = ',');

}  // namespace gegenmetric
