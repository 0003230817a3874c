#include "gegenmetric/errors.hpp"
#include "gegenmetric/gegenbauer.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace gegenmetric {
namespace {

using test::random_rational;

TEST(Gegenbauer, LowOrdersMatchClosedForms) {
  const Rational alpha(3, 2);
  EXPECT_EQ(gegenbauer_coeffs(0, alpha), RatPoly::constant(Rational(1)));
  EXPECT_EQ(gegenbauer_coeffs(1, alpha), RatPoly::monomial(Rational(3), 1));
  // C_2 = 2 alpha (alpha+1) x^2 - alpha
  EXPECT_EQ(gegenbauer_coeffs(2, alpha),
            (RatPoly{Rational(-3, 2), Rational(0), Rational(15, 2)}));
}

TEST(Gegenbauer, CoefficientsMatchOracle) {
  for (const auto& entry : test::oracle()["gegenbauer"]) {
    const int N = entry["N"];
    const Rational alpha = parse_rational(entry["alpha"].get<std::string>());
    const RatPoly p = gegenbauer_coeffs(N, alpha);
    for (int k = 0; k <= N; ++k) {
      EXPECT_EQ(p.coefficient(k), parse_rational(entry["coefficients"][k].get<std::string>()))
          << "N=" << N << " alpha=" << to_string(alpha) << " k=" << k;
    }
  }
}

TEST(Gegenbauer, EvalAgreesWithCoefficients) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational alpha = random_rational(rng, -20, 20, 9);
    const Rational x = random_rational(rng, -20, 20, 11);
    const auto table = gegenbauer_table(12, alpha);
    for (int n = 0; n <= 12; ++n) {
      EXPECT_EQ(gegenbauer_eval(n, alpha, x), table.rows[static_cast<std::size_t>(n)](x));
    }
  }
}

TEST(Gegenbauer, RowsHaveDefiniteParity) {
  const auto table = gegenbauer_table(9, Rational(2, 7));
  for (int n = 0; n <= 9; ++n) {
    const RatPoly& p = table.rows[static_cast<std::size_t>(n)];
    EXPECT_EQ(p.degree(), n);
    for (int k = 0; k <= n; ++k) {
      if ((n - k) % 2 == 1) EXPECT_EQ(p.coefficient(k), 0);
    }
  }
}

TEST(SecularRoots, MatchOracleToFortyDigits) {
  PrecisionGuard guard(working_digits(50));
  for (const auto& entry : test::oracle()["gegenbauer"]) {
    const int N = entry["N"];
    const Rational alpha = parse_rational(entry["alpha"].get<std::string>());
    const EnergySpectrum s = secular_roots(N, alpha, 50);
    ASSERT_EQ(static_cast<int>(s.roots.size()), N);
    for (int k = 0; k < N; ++k) {
      const Real expected(entry["roots"][k].get<std::string>());
      EXPECT_LT(abs(s.roots[static_cast<std::size_t>(k)] - expected), pow10_neg(40))
          << "N=" << N << " alpha=" << to_string(alpha) << " k=" << k;
    }
  }
}

TEST(SecularRoots, N3AlphaOneExample) {
  PrecisionGuard guard(working_digits(50));
  const auto s = secular_roots(3, Rational(1), 50);
  EXPECT_LT(abs(s.roots[0] + sqrt(Real(1) / 2)), pow10_neg(45));
  EXPECT_EQ(s.roots[1], 0);
  EXPECT_LT(abs(s.roots[2] - sqrt(Real(1) / 2)), pow10_neg(45));
}

TEST(SecularRoots, SymmetricAndInterlacing) {
  PrecisionGuard guard(working_digits(30));
  for (const Rational alpha : {Rational(1, 3), Rational(1), Rational(7, 2)}) {
    std::vector<Real> previous;
    for (int N = 1; N <= 11; ++N) {
      const auto roots = secular_roots(N, alpha, 30).roots;
      for (std::size_t k = 0; k < roots.size(); ++k) {
        EXPECT_EQ(roots[k], -roots[roots.size() - 1 - k]);
        if (k + 1 < roots.size()) EXPECT_LT(roots[k], roots[k + 1]);
        EXPECT_LT(abs(roots[k]), 1);
      }
      for (std::size_t k = 0; k < previous.size(); ++k) {
        EXPECT_LT(roots[k], previous[k]);
        EXPECT_LT(previous[k], roots[k + 1]);
      }
      previous = roots;
    }
  }
}

TEST(SecularRoots, RejectsInvalidArguments) {
  EXPECT_THROW(secular_roots(3, Rational(0)), PreconditionError);
  EXPECT_THROW(secular_roots(3, Rational(-1, 2)), PreconditionError);
  EXPECT_THROW(secular_roots(0, Rational(1)), PreconditionError);
  EXPECT_THROW(secular_roots(3, Rational(1), 10), PreconditionError);
  EXPECT_THROW(gegenbauer_coeffs(-1, Rational(1)), PreconditionError);
  // The recurrence itself accepts any alpha.
  EXPECT_EQ(gegenbauer_eval(2, Rational(-1), Rational(1)), Rational(1));
}

}  // namespace
}  // namespace gegenmetric
