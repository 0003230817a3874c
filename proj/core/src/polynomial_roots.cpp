#include "gegenmetric/polynomial_roots.hpp"

#include "gegenmetric/errors.hpp"

#include <algorithm>

namespace gegenmetric {

namespace {

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain;
  if (p.degree() < 1) return chain;
  const RatPoly g = gcd(p, p.derivative());
  RatPoly square_free = divmod(p, g).first;
  chain.push_back(square_free);
  chain.push_back(square_free.derivative());
  while (chain.back().degree() > 0) {
    RatPoly r = -divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& q : chain) {
    const Rational v = q(x);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

int sturm_count(const RatPoly& p, const Rational& lo, const Rational& hi) {
  const auto chain = sturm_chain(p);
  if (chain.empty()) return 0;
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

std::vector<Real> real_roots(const RatPoly& p, int digits) {
  if (p.is_zero()) throw PreconditionError("real_roots: zero polynomial");
  const auto chain = sturm_chain(p);
  if (chain.empty()) return {};

  Rational bound = 0;
  for (const auto& c : p.coefficients()) bound = std::max(bound, Rational(abs(c / p.leading())));
  bound += 1;

  const int wd = working_digits(digits);
  Rational width_tol(1);
  for (int i = 0; i < wd; ++i) width_tol /= 10;

  struct Interval {
    Rational lo, hi;
    int count;
  };
  std::vector<Interval> stack{{-bound, bound, sign_variations(chain, -bound) -
                                                 sign_variations(chain, bound)}};
  std::vector<Interval> isolated;
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    if (iv.count == 0) continue;
    if (iv.count == 1) {
      isolated.push_back(iv);
      continue;
    }
    const Rational mid = (iv.lo + iv.hi) / 2;
    const int left = sign_variations(chain, iv.lo) - sign_variations(chain, mid);
    stack.push_back({mid, iv.hi, iv.count - left});
    stack.push_back({iv.lo, mid, left});
  }

  PrecisionGuard guard(wd);
  std::vector<Real> roots;
  for (auto iv : isolated) {
    while (iv.hi - iv.lo > width_tol) {
      const Rational mid = (iv.lo + iv.hi) / 2;
      if (sign_variations(chain, iv.lo) - sign_variations(chain, mid) == 1) {
        iv.hi = mid;
      } else {
        iv.lo = mid;
      }
    }
    roots.push_back(to_real(iv.hi));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace gegenmetric
