#pragma once

#include "gegenmetric/rat_poly.hpp"
#include "gegenmetric/real.hpp"

#include <vector>

namespace gegenmetric {

// Number of distinct real roots of p in (lo, hi], by Sturm's theorem.
int sturm_count(const RatPoly& p, const Rational& lo, const Rational& hi);

// All distinct real roots of p, ascending, each to 10^-(digits+guard).
// Isolation uses an exact Sturm sequence; refinement bisects on exact
// rational midpoints.
std::vector<Real> real_roots(const RatPoly& p, int digits = kDefaultDigits);

}  // namespace gegenmetric
