#include "gegenmetric/dieudonne.hpp"
#include "gegenmetric/errors.hpp"
#include "gegenmetric/exact_linalg.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace gegenmetric {
namespace {

using test::random_rational;

std::vector<LinearForm> row_of(const std::vector<std::string>& names) {
  std::vector<LinearForm> row;
  for (const auto& n : names) row.push_back(parse_linear_form(n));
  return row;
}

TEST(Dieudonne, EquationOrderingForN4) {
  const auto ord = order_equations(4);
  const std::vector<std::pair<int, int>> expected = {{1, 4}, {1, 3}, {2, 4},
                                                     {1, 2}, {2, 3}, {3, 4}};
  EXPECT_EQ(ord.sequence, expected);
  EXPECT_THROW(order_equations(1), PreconditionError);
  for (int N = 2; N <= 9; ++N) {
    EXPECT_EQ(static_cast<int>(order_equations(N).sequence.size()), N * (N - 1) / 2);
  }
}

TEST(Dieudonne, MatchesOracleSolutions) {
  for (const auto& entry : test::oracle()["metrics"]) {
    const int N = entry["N"];
    const Convention conv = parse_convention(entry["convention"].get<std::string>());
    const auto names = entry["first_row"].get<std::vector<std::string>>();
    const SymbolicMatrix theta = solve_metric(N, conv, row_of(names));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        const auto text = entry["entries"][i][j].get<std::string>();
        EXPECT_EQ(theta(static_cast<std::size_t>(i), static_cast<std::size_t>(j)),
                  parse_linear_form(text))
            << "N=" << N << " " << to_string(conv) << " (" << i + 1 << "," << j + 1 << ")";
      }
  }
}

TEST(Dieudonne, PrintedN4Formulas) {
  const SymbolicMatrix theta = solve_metric(4, Convention::displayed, row_of({"k", "b", "c", "d"}));
  EXPECT_EQ(theta(1, 3), parse_linear_form("c*(a+1)/(2*(a+2)*a)"));
  EXPECT_EQ(theta(1, 2), parse_linear_form("(b*a+3*b+2*d*a^2+4*d*a+2*d)/(2*(a+3)*a)"));
  EXPECT_EQ(theta(2, 3), parse_linear_form("(-6*d*a-10*d+b*a+3*b)/(2*(a+3)*a*(2*a+1))"));
  EXPECT_EQ(theta(1, 1), parse_linear_form("(2*c*a^2+k*a+c*a+2*k)*(a+1)/(2*(a+2)*a^2)"));
  EXPECT_EQ(theta(2, 2),
            parse_linear_form("(2*c*a^3+c*a^2-7*c*a+k*a^2+5*k*a+6*k)/(2*(a+3)*a^2*(2*a+1))"));
  EXPECT_EQ(theta(3, 3), parse_linear_form(
                             "-(6*c*a^2+10*c*a-k*a^2-5*k*a-6*k)/(4*a^2*(2*a+1)*(a+2)*(a+1))"));
}

TEST(Dieudonne, TraceFixesOneUnknownPerStep) {
  EliminationTrace trace;
  solve_metric(4, Convention::displayed, row_of({"k", "b", "c", "d"}), &trace);
  // Fill order: h, g, n, f, m, j.
  const std::vector<std::pair<int, int>> unknowns = {{2, 4}, {2, 3}, {3, 4},
                                                     {2, 2}, {3, 3}, {4, 4}};
  ASSERT_EQ(trace.size(), unknowns.size());
  for (std::size_t s = 0; s < trace.size(); ++s) {
    EXPECT_EQ(trace[s].unknown, unknowns[s]);
    EXPECT_EQ(trace[s].unknown.first, trace[s].equation.first + 1);
    EXPECT_EQ(trace[s].unknown.second, trace[s].equation.second);
    EXPECT_EQ(trace[s].undetermined_referenced, 1);
  }
  for (int N = 2; N <= 9; ++N) {
    EliminationTrace t;
    solve_metric(N, Convention::recurrence, std::vector<LinearForm>(N, LinearForm(Rational(1))),
                 &t);
    for (const auto& step : t) EXPECT_EQ(step.undetermined_referenced, 1);
  }
}

TEST(Dieudonne, ResidualVanishesForBothConventions) {
  for (const Convention conv : {Convention::displayed, Convention::recurrence}) {
    for (int N = 1; N <= 8; ++N) {
      const MetricSolution sol = pseudometric_basis(N, conv);
      const RatFuncMatrix H = build_hamiltonian(N, conv);
      ASSERT_EQ(static_cast<int>(sol.basis.size()), N);
      for (const auto& P : sol.basis) {
        EXPECT_TRUE(is_zero_matrix(residual(H, P))) << "N=" << N;
        EXPECT_TRUE(P.is_symmetric());
      }
      std::vector<LinearForm> kappa;
      for (const auto& name : sol.parameter_names) kappa.push_back(LinearForm::parameter(name));
      const SymbolicMatrix general = sol.combine(kappa);
      EXPECT_EQ(residual(H, general), SymbolicMatrix(static_cast<std::size_t>(N),
                                                     static_cast<std::size_t>(N)));
    }
  }
}

TEST(Dieudonne, SolutionIsLinearInTheFirstRow) {
  std::mt19937 rng(23);
  const int N = 5;
  const RatFuncMatrix H = build_hamiltonian(N, Convention::displayed);
  const MetricSolution sol = pseudometric_basis(N);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<RatFunc> x, y;
    const Rational s = random_rational(rng);
    for (int j = 0; j < N; ++j) {
      x.emplace_back(random_rational(rng));
      y.emplace_back(random_rational(rng));
    }
    std::vector<RatFunc> combo;
    for (int j = 0; j < N; ++j) combo.push_back(x[j] * RatFunc(s) + y[j]);
    const RatFuncMatrix tx = solve_metric(H, x);
    const RatFuncMatrix ty = solve_metric(H, y);
    const RatFuncMatrix tc = solve_metric(H, combo);
    EXPECT_EQ(tc, tx.map([&](const RatFunc& f) { return f * RatFunc(s); }) + ty);
    // And equal to the basis combination.
    RatFuncMatrix from_basis = RatFuncMatrix::square(N);
    for (int j = 0; j < N; ++j)
      from_basis = from_basis + sol.basis[j].map([&](const RatFunc& f) { return f * x[j]; });
    EXPECT_EQ(tx, from_basis);
  }
}

TEST(Dieudonne, FixedCouplingAgreesWithSymbolic) {
  std::mt19937 rng(29);
  for (int N = 2; N <= 6; ++N) {
    const RatFuncMatrix H = build_hamiltonian(N, Convention::displayed);
    const MetricSolution sol = pseudometric_basis(N);
    const Rational a0 = Rational(3, 7);
    std::vector<Rational> kappa;
    for (int j = 0; j < N; ++j) kappa.push_back(random_rational(rng));
    EXPECT_EQ(solve_metric(evaluate(H, a0), kappa), combine(sol.at(a0), kappa));
  }
}

TEST(Dieudonne, NullspaceDimensionMatchesOracle) {
  for (const auto& entry : test::oracle()["nullspace"]) {
    const int N = entry["N"];
    const Convention conv = parse_convention(entry["convention"].get<std::string>());
    const Rational a0 = parse_rational(entry["a0"].get<std::string>());
    const NullspaceResult ns = nullspace_oracle(N, conv, a0);
    EXPECT_EQ(ns.dimension, entry["dimension"].get<int>());
    std::vector<std::vector<Rational>> ours, theirs;
    for (const auto& m : pseudometric_basis(N, conv).at(a0)) ours.push_back(upper_triangle(m));
    for (const auto& m : ns.basis) theirs.push_back(upper_triangle(m));
    EXPECT_TRUE(same_span(ours, theirs)) << "N=" << N << " a0=" << to_string(a0);
  }
}

TEST(Dieudonne, RejectsMalformedFirstRow) {
  EXPECT_THROW(solve_metric(3, Convention::displayed, row_of({"k", "b"})), PreconditionError);
  const MetricSolution sol = pseudometric_basis(3);
  EXPECT_EQ(sol.parameter_names, (std::vector<std::string>{"theta_1_1", "theta_1_2", "theta_1_3"}));
  EXPECT_THROW(combine(sol.at(Rational(1)), {Rational(1)}), PreconditionError);
}

TEST(Dieudonne, ToyMetricFamily) {
  const SymbolicMatrix theta =
      solve_metric(3, Convention::displayed, row_of({"2*a^2", "2*g*a", "0"}));
  const auto& toy = test::oracle()["toy"]["entries"];
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_EQ(theta(i, j), parse_linear_form(toy[i][j].get<std::string>()));
}

}  // namespace
}  // namespace gegenmetric
