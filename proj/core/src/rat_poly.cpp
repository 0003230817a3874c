#include "gegenmetric/rat_poly.hpp"

#include "gegenmetric/errors.hpp"

#include <algorithm>

namespace gegenmetric {

RatPoly::RatPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

RatPoly::RatPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const Rational& c, int power) {
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coefficient(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational RatPoly::operator()(const Rational& x) const { return evaluate<Rational>(x); }

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return RatPoly();
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return RatPoly(std::move(out));
}

RatPoly& RatPoly::operator*=(const RatPoly& other) { return *this = *this * other; }

RatPoly& RatPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return RatPoly();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<long>(k);
  return RatPoly(std::move(out));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading());
}

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    std::string term;
    const bool integral = denominator(c) == 1;
    const std::string power = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (k == 0) {
      term = integral ? numerator(c).str() : "(" + gegenmetric::to_string(c) + ")";
    } else if (c == 1) {
      term = power;
    } else if (c == -1) {
      term = "-" + power;
    } else {
      term = (integral ? numerator(c).str() : "(" + gegenmetric::to_string(c) + ")") + "*" + power;
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& dividend, const RatPoly& divisor) {
  if (divisor.is_zero()) throw DivisionByZeroError("division by zero polynomial");
  std::vector<Rational> rem = dividend.coefficients();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {RatPoly(), dividend};
  std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
  const Rational inv_lead = 1 / divisor.leading();
  for (int k = dividend.degree(); k >= dd; --k) {
    const Rational q = rem[static_cast<std::size_t>(k)] * inv_lead;
    quot[static_cast<std::size_t>(k - dd)] = q;
    if (q == 0) continue;
    for (int i = 0; i <= dd; ++i) {
      rem[static_cast<std::size_t>(k - dd + i)] -= q * divisor.coefficient(i);
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly gcd(const RatPoly& p, const RatPoly& q) {
  RatPoly a = p;
  RatPoly b = q;
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Rational content(const RatPoly& p) {
  if (p.is_zero()) return Rational(0);
  Integer den_lcm = 1;
  for (const auto& c : p.coefficients()) den_lcm = lcm(den_lcm, denominator(c));
  Integer num_gcd = 0;
  for (const auto& c : p.coefficients()) {
    num_gcd = gcd(num_gcd, Integer(numerator(c) * (den_lcm / denominator(c))));
  }
  return Rational(num_gcd, den_lcm);
}

}  // namespace gegenmetric
