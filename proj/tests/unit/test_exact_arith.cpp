#include "gegenmetric/errors.hpp"
#include "gegenmetric/exact_linalg.hpp"
#include "gegenmetric/linear_form.hpp"
#include "gegenmetric/numeric_matrix.hpp"
#include "gegenmetric/polynomial_roots.hpp"
#include "gegenmetric/rat_func.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace gegenmetric {
namespace {

using test::random_rational;

RatPoly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c;
  const int d = deg(rng);
  for (int k = 0; k <= d; ++k) c.push_back(random_rational(rng, -6, 6, 4));
  return RatPoly(c);
}

RatFunc random_ratfunc(std::mt19937& rng) {
  RatPoly den;
  while (den.is_zero()) den = random_poly(rng, 2);
  return normalize(random_poly(rng, 3), den);
}

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("17"), Rational(17));
  EXPECT_EQ(parse_rational("-0.125"), Rational(-1, 8));
  EXPECT_EQ(parse_rational("1.5e-3"), Rational(3, 2000));
  EXPECT_EQ(parse_rational("010/03"), Rational(10, 3));
  EXPECT_EQ(parse_rational("0.0125"), Rational(1, 80));
  EXPECT_EQ(parse_rational("-00"), Rational(0));
  EXPECT_EQ(to_string(Rational(-3, 4)), "-3/4");
  EXPECT_EQ(to_string(Rational(5)), "5");
}

TEST(Rational, RejectsMalformedInput) {
  for (const char* bad : {"", "1/0", "abc", "1/2/3", "1..2", "--1"}) {
    EXPECT_THROW(parse_rational(bad), PreconditionError) << bad;
  }
}

TEST(RatPoly, DivmodReconstructsDividend) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const RatPoly p = random_poly(rng, 5);
    RatPoly q;
    while (q.is_zero()) q = random_poly(rng, 3);
    const auto [quot, rem] = divmod(p, q);
    EXPECT_EQ(quot * q + rem, p);
    EXPECT_LT(rem.degree(), q.degree() == 0 ? 0 : q.degree());
  }
  EXPECT_THROW(divmod(RatPoly::x(), RatPoly()), DivisionByZeroError);
}

TEST(RatPoly, GcdIsMonicCommonFactor) {
  const RatPoly f{Rational(1), Rational(1)};   // 1+x
  const RatPoly g{Rational(-2), Rational(1)};  // x-2
  const RatPoly h{Rational(3), Rational(0), Rational(2)};
  const RatPoly d = gcd(f * g * Rational(6), f * h * Rational(-4));
  EXPECT_EQ(d, f);
  EXPECT_EQ(gcd(RatPoly(), RatPoly()), RatPoly());
}

TEST(RatFunc, CanonicalFormSpecExamples) {
  const RatFunc a = RatFunc::variable();
  EXPECT_EQ(((RatFunc(1) + a) / (RatFunc(2) * a)).to_string(), "(1+a)/(2*a)");
  EXPECT_EQ((RatFunc(-1) / (RatFunc(4) + RatFunc(2) * a)).to_string(), "-1/(4+2*a)");
  EXPECT_EQ((RatFunc(1) + a).to_string(), "1+a");
  EXPECT_EQ(RatFunc().to_string(), "0");
  // Common factors cancel and the denominator is primitive with positive lead.
  const RatFunc r = normalize(RatPoly{Rational(2), Rational(2)},
                              RatPoly{Rational(-3), Rational(-3)});
  EXPECT_EQ(r, RatFunc(Rational(-2, 3)));
  const RatFunc s = normalize(RatPoly{Rational(1)}, RatPoly{Rational(0), Rational(-1, 2)});
  EXPECT_EQ(s.den(), (RatPoly{Rational(0), Rational(1)}));
  EXPECT_EQ(s.num(), RatPoly::constant(Rational(-2)));
}

TEST(RatFunc, NormalizeIsIdempotent) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const RatFunc f = random_ratfunc(rng);
    EXPECT_EQ(normalize(f.num(), f.den()), f);
    EXPECT_GT(f.den().leading(), 0);
    EXPECT_EQ(content(f.den()), 1);
  }
}

TEST(RatFunc, FieldAxiomsOnRandomSamples) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const RatFunc x = random_ratfunc(rng);
    const RatFunc y = random_ratfunc(rng);
    const RatFunc z = random_ratfunc(rng);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x + RatFunc(), x);
    EXPECT_EQ(x * RatFunc(1), x);
    EXPECT_TRUE((x - x).is_zero());
    if (!x.is_zero()) EXPECT_EQ(x / x, RatFunc(1));
  }
}

TEST(RatFunc, EvaluationIsAHomomorphism) {
  std::mt19937 rng(13);
  int checked = 0;
  while (checked < 80) {
    const RatFunc x = random_ratfunc(rng);
    const RatFunc y = random_ratfunc(rng);
    const Rational a0 = random_rational(rng, -20, 20, 7);
    try {
      const Rational xv = x(a0);
      const Rational yv = y(a0);
      EXPECT_EQ((x + y)(a0), xv + yv);
      EXPECT_EQ((x * y)(a0), xv * yv);
      EXPECT_EQ((x - y)(a0), xv - yv);
      if (yv != 0 && !y.is_zero()) EXPECT_EQ((x / y)(a0), xv / yv);
      ++checked;
    } catch (const PoleError&) {
    }
  }
}

TEST(RatFunc, PoleAndDivisionByZero) {
  const RatFunc a = RatFunc::variable();
  const RatFunc f = RatFunc(1) / (a - RatFunc(2));
  EXPECT_THROW(f(Rational(2)), PoleError);
  EXPECT_EQ(f(Rational(3)), Rational(1));
  EXPECT_THROW(a / RatFunc(), DivisionByZeroError);
  EXPECT_THROW(normalize(RatPoly::x(), RatPoly()), DivisionByZeroError);
  EXPECT_EQ(a.pow(3)(Rational(2)), Rational(8));
}

TEST(RatFunc, TextRoundTrip) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const RatFunc f = random_ratfunc(rng);
    EXPECT_EQ(parse_rat_func(f.to_string()), f) << f.to_string();
  }
}

TEST(LinearForm, ParsesAffineExpressions) {
  const LinearForm f = parse_linear_form("(2*c*a^2+k*a+c*a+2*k)*(a+1)/(2*(a+2)*a^2)");
  EXPECT_EQ(f.coefficient("k"), parse_rat_func("(a+1)/(2*a^2)"));
  EXPECT_EQ(f.coefficient("c"), parse_rat_func("(2*a+1)*(a+1)/(2*(a+2)*a)"));
  EXPECT_TRUE(f.constant().is_zero());
  const LinearForm g = parse_linear_form("3 - 2*x/(a+1) + 0.5");
  EXPECT_EQ(g.constant(), RatFunc(Rational(7, 2)));
  EXPECT_EQ(g.evaluate(Rational(1), {{"x", Rational(2)}}), Rational(3, 2));
  EXPECT_EQ(parse_linear_form(g.to_string()), g);
}

TEST(LinearForm, RejectsNonlinearOrUnknownInput) {
  EXPECT_THROW(parse_linear_form("k*b"), PreconditionError);
  EXPECT_THROW(parse_linear_form("1/k"), PreconditionError);
  EXPECT_THROW(parse_linear_form("k^2"), PreconditionError);
  EXPECT_THROW(parse_linear_form("(a+1"), PreconditionError);
  EXPECT_THROW(parse_linear_form("z", {"k"}), PreconditionError);
  EXPECT_THROW(parse_rat_func("k+a"), PreconditionError);
  EXPECT_THROW(parse_rat_func("1/(a-a)"), std::exception);
}

TEST(LinearForm, SplitTopLevel) {
  EXPECT_EQ(split_top_level("k,b,(c,d),2*a^2"),
            (std::vector<std::string>{"k", "b", "(c,d)", "2*a^2"}));
}

TEST(ExactLinalg, RankNullspaceDeterminant) {
  RationalMatrix m(3, 4, Rational(0));
  const int vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, -1, 2}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = Rational(vals[i][j]);
  EXPECT_EQ(rank(m), 2u);
  const auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) {
    for (std::size_t i = 0; i < 3; ++i) {
      Rational dot = 0;
      for (std::size_t j = 0; j < 4; ++j) dot += m(i, j) * v[j];
      EXPECT_EQ(dot, 0);
    }
  }
  RationalMatrix sq(3, 3, Rational(0));
  const int s[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) sq(i, j) = Rational(s[i][j], 3);
  EXPECT_EQ(determinant(sq), Rational(4, 27));
  EXPECT_TRUE(same_span(ns, {ns[1], ns[0]}));
}

TEST(ExactLinalg, SameSpanDetectsDifference) {
  const std::vector<std::vector<Rational>> a = {{1, 0, 0}, {0, 1, 0}};
  const std::vector<std::vector<Rational>> b = {{1, 1, 0}, {1, -1, 0}};
  const std::vector<std::vector<Rational>> c = {{1, 0, 0}, {0, 0, 1}};
  EXPECT_TRUE(same_span(a, b));
  EXPECT_FALSE(same_span(a, c));
}

TEST(PolynomialRoots, SturmCountsAndRefinesRoots) {
  // (x^2 - 2)(x - 1/3)
  const RatPoly p = RatPoly{Rational(-2), Rational(0), Rational(1)} *
                    RatPoly{Rational(-1, 3), Rational(1)};
  EXPECT_EQ(sturm_count(p, Rational(-10), Rational(10)), 3);
  EXPECT_EQ(sturm_count(p, Rational(0), Rational(1)), 1);
  PrecisionGuard guard(working_digits(40));
  const auto roots = real_roots(p, 40);
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_LT(abs(roots[0] + sqrt(Real(2))), pow10_neg(40));
  EXPECT_LT(abs(roots[1] - Real(1) / 3), pow10_neg(40));
  EXPECT_LT(abs(roots[2] - sqrt(Real(2))), pow10_neg(40));
}

TEST(NumericMatrix, EvaluateNamesThePoleEntry) {
  RatFuncMatrix m = RatFuncMatrix::square(2);
  m(1, 0) = parse_rat_func("1/(a-1)");
  try {
    evaluate(m, Rational(1));
    FAIL() << "expected PoleError";
  } catch (const PoleError& e) {
    EXPECT_NE(std::string(e.what()).find("entry [1][0]"), std::string::npos) << e.what();
  }
  EXPECT_FALSE(instantiate(m, Rational(2)).symmetric);
}

}  // namespace
}  // namespace gegenmetric
