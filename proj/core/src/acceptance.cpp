#include "gegenmetric/acceptance.hpp"

#include "gegenmetric/dieudonne.hpp"
#include "gegenmetric/exact_linalg.hpp"
#include "gegenmetric/gegenbauer.hpp"
#include "gegenmetric/polynomial_roots.hpp"
#include "gegenmetric/positivity.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

namespace gegenmetric {

namespace {

constexpr int kDigits = 50;
constexpr unsigned kSeed = 20240917u;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      if (!passed) detail << "; ";
      passed = false;
      detail << what;
    }
  }
};

Rational random_rational(std::mt19937& rng, int lo, int hi, int den) {
  std::uniform_int_distribution<int> dist(lo, hi);
  return Rational(dist(rng), den);
}

std::vector<LinearForm> parse_row(const std::vector<std::string>& entries) {
  std::vector<LinearForm> row;
  for (const auto& e : entries) row.push_back(parse_linear_form(e));
  return row;
}

std::string fmt(const Real& value) { return format_real(value, 6); }

// ---------------------------------------------------------------------------

void closed_form_n4(Outcome& out) {
  const SymbolicMatrix theta =
      solve_metric(4, Convention::displayed, parse_row({"k", "b", "c", "d"}));
  // Reference closed forms of the six eliminated elements.
  const std::vector<std::tuple<std::string, std::size_t, std::size_t, std::string>> reference = {
      {"h", 1, 3, "c*(a+1)/(2*(a+2)*a)"},
      {"g", 1, 2, "(b*a+3*b+2*d*a^2+4*d*a+2*d)/(2*(a+3)*a)"},
      {"n", 2, 3, "(-6*d*a-10*d+b*a+3*b)/(2*(a+3)*a*(2*a+1))"},
      {"f", 1, 1, "(2*c*a^2+k*a+c*a+2*k)*(a+1)/(2*(a+2)*a^2)"},
      {"m", 2, 2, "(2*c*a^3+c*a^2-7*c*a+k*a^2+5*k*a+6*k)/(2*(a+3)*a^2*(2*a+1))"},
      {"j", 3, 3, "-(6*c*a^2+10*c*a-k*a^2-5*k*a-6*k)/(4*a^2*(2*a+1)*(a+2)*(a+1))"},
  };
  for (const auto& [name, i, j, text] : reference) {
    out.require(theta(i, j) == parse_linear_form(text),
                name + " mismatch: got " + theta(i, j).to_string());
    out.require(theta(j, i) == theta(i, j), name + " not symmetric");
  }
  const std::vector<std::string> first_row = {"k", "b", "c", "d"};
  for (std::size_t j = 0; j < 4; ++j) {
    out.require(theta(0, j) == parse_linear_form(first_row[j]), "first row altered");
  }
}

RatFuncMatrix toy_metric(const Rational& g) {
  const RatFunc a = RatFunc::variable();
  RatFuncMatrix m = RatFuncMatrix::square(3);
  m(0, 0) = RatFunc(2) * a * a;
  m(0, 1) = m(1, 0) = RatFunc(2 * g) * a;
  m(1, 1) = a + RatFunc(1);
  m(1, 2) = m(2, 1) = RatFunc(g);
  m(2, 2) = (a + RatFunc(2)) / (RatFunc(2) * a + RatFunc(1));
  return m;
}

void toy_metric_regression(Outcome& out) {
  std::mt19937 rng(kSeed);
  const RatFuncMatrix H = build_hamiltonian(3, Convention::displayed);
  const RatFunc a = RatFunc::variable();
  for (int sample = 0; sample < 5; ++sample) {
    const Rational g = random_rational(rng, -300, 300, 97);
    const RatFuncMatrix theta =
        solve_metric(H, std::vector<RatFunc>{RatFunc(2) * a * a, RatFunc(2 * g) * a, RatFunc()});
    out.require(theta == toy_metric(g), "toy metric mismatch at g = " + to_string(g));
    out.require(is_zero_matrix(residual(H, theta)), "nonzero residual at g = " + to_string(g));
  }
  // Symbolic g as well.
  const SymbolicMatrix symbolic = solve_metric(H, parse_row({"2*a^2", "2*g*a", "0"}));
  out.require(symbolic(1, 1) == parse_linear_form("a+1") &&
                  symbolic(1, 2) == parse_linear_form("g") &&
                  symbolic(2, 2) == parse_linear_form("(a+2)/(2*a+1)"),
              "symbolic toy metric mismatch");
  out.require(residual(H, symbolic) == SymbolicMatrix(3, 3), "symbolic residual nonzero");
}

void char_poly_match(Outcome& out) {
  // Theta_g^(3)(1) with g as the polynomial indeterminate.
  const SymbolicMatrix symbolic =
      solve_metric(3, Convention::displayed, parse_row({"2*a^2", "2*g*a", "0"}));
  const RatFunc g = RatFunc::variable();
  RatFuncMatrix theta = RatFuncMatrix::square(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const LinearForm& e = symbolic(i, j);
      theta(i, j) = RatFunc(e.constant()(Rational(1))) + RatFunc(e.coefficient("g")(Rational(1))) * g;
    }
  const auto coeffs = char_poly(theta);
  const std::vector<RatFunc> expected = {parse_rat_func("4-6*g^2", "g"),
                                         parse_rat_func("-(8-5*g^2)", "g"), RatFunc(5),
                                         RatFunc(-1)};
  out.require(coeffs == expected, "symbolic characteristic polynomial mismatch");

  // Reference expansion in E = exp(-ttr-20), at sampled rational g.
  std::mt19937 rng(kSeed + 3);
  for (int sample = 0; sample < 5; ++sample) {
    const Rational gv = random_rational(rng, -200, 200, 53);
    const std::string gs = "(" + to_string(gv) + ")";
    const std::string reference = "4-8*E+5*E^2-6*" + gs + "^2-E^3+5*" + gs + "^2*E";
    const RatFunc expansion = parse_rat_func(reference, "E");
    RationalMatrix at_g(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) at_g(i, j) = theta(i, j)(gv);
    const auto c = char_poly(at_g);
    const RatFunc numeric_poly(RatPoly(std::vector<Rational>(c.begin(), c.end())));
    out.require(numeric_poly == expansion, "reference expansion mismatch at g = " + to_string(gv));
  }
}

void solution_space_dimension(Outcome& out) {
  for (const Convention conv : {Convention::displayed, Convention::recurrence}) {
    for (int N = 2; N <= 6; ++N) {
      const MetricSolution basis = pseudometric_basis(N, conv);
      for (const Rational& a0 : {Rational(1, 2), Rational(1), Rational(3)}) {
        const NullspaceResult oracle = nullspace_oracle(N, conv, a0);
        std::vector<std::vector<Rational>> ours, theirs;
        for (const auto& p : basis.at(a0)) ours.push_back(upper_triangle(p));
        for (const auto& p : oracle.basis) theirs.push_back(upper_triangle(p));
        const std::string where = to_string(conv) + " N=" + std::to_string(N) +
                                  " a0=" + to_string(a0);
        out.require(oracle.dimension == N, "oracle dimension " +
                                               std::to_string(oracle.dimension) + " at " + where);
        out.require(rank(stack_rows(ours)) == static_cast<std::size_t>(N),
                    "basis rank deficient at " + where);
        out.require(same_span(ours, theirs), "spans differ at " + where);
      }
    }
  }
}

void positivity_boundary(Outcome& out) {
  const DomainScan scan =
      scan_domain(3, Convention::displayed, Rational(1), toy_line(Rational(1)), kDigits);
  PrecisionGuard guard(working_digits(kDigits));
  const Real expected = sqrt(Real(2) / 3);
  const Real tol = pow10_neg(10);
  out.require(scan.intervals.size() == 1,
              "expected one interval, got " + std::to_string(scan.intervals.size()));
  if (scan.intervals.size() != 1) return;
  const auto& iv = scan.intervals.front();
  out.require(iv.lower.has_value() && iv.upper.has_value(), "interval open at range edge");
  const Real lo_err = abs(-to_real(iv.lo) - expected);
  const Real hi_err = abs(to_real(iv.hi) - expected);
  out.require(lo_err < tol, "lower boundary error " + fmt(lo_err));
  out.require(hi_err < tol, "upper boundary error " + fmt(hi_err));
  out.detail << "boundaries " << format_real(to_real(iv.lo), 15) << ", "
             << format_real(to_real(iv.hi), 15);
}

void eigenvector_consistency(Outcome& out) {
  Real worst = 0;
  {
    PrecisionGuard guard(working_digits(kDigits));
    for (int N = 2; N <= 8; ++N) {
      const auto report = verify_eigensystem(N, Rational(1), Convention::recurrence, kDigits);
      worst = std::max(worst, report.max_residual);
      out.require(report.max_residual < pow10_neg(40),
                  "residual " + fmt(report.max_residual) + " at N=" + std::to_string(N));
    }
  }
  const auto displayed = verify_eigensystem(3, Rational(1), Convention::displayed, kDigits);
  PrecisionGuard guard(working_digits(kDigits));
  const Real a = 1;
  const Real predicted =
      abs(sqrt((4 * a + 5) / (4 * (a + 1) * (a + 2))) - sqrt(3 / (2 * (a + 2))));
  const Real mismatch = abs(displayed.spectral_gap - predicted);
  out.require(mismatch < pow10_neg(40), "displayed N=3 gap off by " + fmt(mismatch));
  out.detail << "max recurrence residual " << fmt(worst) << ", displayed N=3 gap "
             << fmt(displayed.spectral_gap);
}

void hermitization(Outcome& out) {
  std::mt19937 rng(kSeed + 7);
  Real worst_defect = 0;
  Real worst_spectrum = 0;
  for (int N = 2; N <= 7; ++N) {
    const RatFuncMatrix H = build_hamiltonian(N, Convention::displayed);
    const RationalMatrix H1 = evaluate(H, Rational(1));
    const NumericMatrix H_num = instantiate_hamiltonian(H, Rational(1), kDigits);
    const auto basis = pseudometric_basis(N, Convention::displayed).at(Rational(1));
    const auto cp = char_poly(H1);
    const auto reference = real_roots(RatPoly(std::vector<Rational>(cp.begin(), cp.end())), kDigits);
    out.require(reference.size() == static_cast<std::size_t>(N),
                "H spectrum not simple at N=" + std::to_string(N));

    for (int point = 0; point < 3; ++point) {
      std::vector<Rational> kappa(static_cast<std::size_t>(N));
      kappa[0] = 2;
      for (std::size_t j = 1; j < kappa.size(); ++j) kappa[j] = random_rational(rng, -100, 100, 100);
      RationalMatrix theta = combine(basis, kappa);
      while (!is_positive_definite(theta).positive_definite) {
        for (std::size_t j = 1; j < kappa.size(); ++j) kappa[j] /= 2;
        theta = combine(basis, kappa);
      }
      const auto herm = hermitize(H_num, to_numeric(theta, kDigits), kDigits);
      const auto h_spectrum = sym_eigen(symmetrized(herm.h.entries, kDigits), kDigits).values;
      PrecisionGuard guard(working_digits(kDigits));
      Real gap = 0;
      for (std::size_t k = 0; k < reference.size() && k < h_spectrum.size(); ++k) {
        gap = std::max(gap, Real(abs(h_spectrum[k] - reference[k])));
      }
      worst_defect = std::max(worst_defect, herm.symmetry_defect);
      worst_spectrum = std::max(worst_spectrum, gap);
      out.require(herm.symmetry_defect < pow10_neg(38),
                  "symmetry defect " + fmt(herm.symmetry_defect) + " at N=" + std::to_string(N));
      out.require(gap < pow10_neg(38),
                  "spectral mismatch " + fmt(gap) + " at N=" + std::to_string(N));
    }
  }
  out.detail << "max symmetry defect " << fmt(worst_defect) << ", max spectral mismatch "
             << fmt(worst_spectrum);
}

void curve_properties(Outcome& out) {
  std::mt19937 rng(kSeed + 11);
  for (const int N : {7, 9}) {
    const Rational a0(1);
    ParameterLine line = default_line(N, a0);
    line.grid_points = 401;
    const auto basis = pseudometric_basis(N, Convention::displayed).at(a0);
    const CurveTable curves = eigencurves(basis, a0, line, kDigits, false);
    const std::string tag = "N=" + std::to_string(N);

    PrecisionGuard guard(working_digits(kDigits));
    const std::size_t points = curves.t.size();
    out.require(points == 401, tag + ": wrong grid size");
    Real scale = 0;
    for (const auto& row : curves.values) {
      out.require(row.size() == static_cast<std::size_t>(N), tag + ": wrong curve count");
      for (const auto& v : row) scale = std::max(scale, Real(abs(v)));
    }
    const Real floor = scale * pow10_neg(kDigits - 10);
    const Real h = to_real(Rational((line.t_max - line.t_min) / (line.grid_points - 1)));
    // Continuity: every step stays within 10x the local slope estimate
    // h * max(|p'(t_i)|, |p'(t_i+1)|).
    Real worst_ratio = 0;
    for (std::size_t j = 0; j < static_cast<std::size_t>(N); ++j) {
      for (std::size_t i = 0; i + 1 < points; ++i) {
        const Real step = abs(curves.values[i + 1][j] - curves.values[i][j]);
        const Real local =
            h * std::max(Real(abs(curves.slopes[i][j])), Real(abs(curves.slopes[i + 1][j])));
        if (local > 0) worst_ratio = std::max(worst_ratio, Real(step / local));
        if (step > 10 * local + floor) {
          out.require(false, tag + ": jump in curve p" + std::to_string(j + 1) + " at t=" +
                                 to_string(curves.t[i]));
          break;
        }
      }
    }
    out.detail << tag << " max step/slope ratio " << fmt(worst_ratio) << "; ";
    // Sign-flip symmetry t -> -t of the eigenvalue multiset.
    out.require(line.sign_flip_symmetric(), tag + ": default line lacks sign-flip symmetry");
    for (std::size_t i = 0; i < points; ++i) {
      const std::size_t mirror = points - 1 - i;
      out.require(curves.t[i] == -curves.t[mirror], tag + ": grid not symmetric");
      std::vector<Real> here = curves.values[i];
      std::vector<Real> there = curves.values[mirror];
      std::sort(here.begin(), here.end());
      std::sort(there.begin(), there.end());
      for (std::size_t j = 0; j < here.size(); ++j) {
        if (abs(here[j] - there[j]) > floor) {
          out.require(false, tag + ": sign-flip asymmetry at t=" + to_string(curves.t[i]));
          i = points;
          break;
        }
      }
    }
    // Positivity intervals hold exactly at random interior rational points.
    const DomainScan scan = scan_domain(basis, a0, line, kDigits, default_refine_tol());
    out.require(!scan.intervals.empty(), tag + ": no positivity interval");
    for (const auto& iv : scan.intervals) {
      std::uniform_int_distribution<int> frac(1, 9999);
      for (int k = 0; k < 10; ++k) {
        const Rational s(frac(rng), 10000);
        const Rational t = iv.lo + s * (iv.hi - iv.lo);
        out.require(is_positive_definite(combine(basis, line.kappa(t))).positive_definite,
                    tag + ": Sylvester test fails inside interval at t=" + to_string(t));
      }
      for (const auto& bracket : {iv.lower, iv.upper}) {
        if (!bracket) continue;
        out.require(is_positive_definite(combine(basis, line.kappa(bracket->inside))).positive_definite &&
                        !is_positive_definite(combine(basis, line.kappa(bracket->outside))).positive_definite,
                    tag + ": boundary bracket does not straddle the domain edge");
      }
      out.detail << tag << " interval [" << format_real(to_real(iv.lo), 12) << ", "
                 << format_real(to_real(iv.hi), 12) << "] ";
    }
  }
}

struct Criterion {
  int id;
  std::string name;
  double time_limit;  // seconds; 0 means unbounded
  std::function<void(Outcome&)> body;
};

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream* log) {
  const std::vector<Criterion> criteria = {
      {1, "N=4 closed-form metric regression", 1.0, closed_form_n4},
      {2, "toy metric regression and exact residual", 1.0, toy_metric_regression},
      {3, "characteristic polynomial of the toy metric", 0.0, char_poly_match},
      {4, "solution-space dimension and span", 30.0, solution_space_dimension},
      {5, "toy positivity boundary sqrt(2/3)", 5.0, positivity_boundary},
      {6, "eigenvector / secular consistency", 0.0, eigenvector_consistency},
      {7, "hermitization symmetry and isospectrality", 30.0, hermitization},
      {8, "eigenvalue-curve property suite (N=7, 9)", 0.0, curve_properties},
  };
  std::vector<CriterionResult> results;
  for (const auto& c : criteria) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(outcome);
    } catch (const std::exception& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && seconds > c.time_limit) {
      std::ostringstream why;
      why << "runtime " << seconds << " s exceeds " << c.time_limit << " s";
      outcome.require(false, why.str());
    }
    CriterionResult r{c.id, c.name, outcome.passed, outcome.detail.str(), seconds};
    if (log) {
      *log << (r.passed ? "[PASS] " : "[FAIL] ") << "AC" << r.id << " " << r.name << " ("
           << r.seconds << " s)";
      if (!r.detail.empty()) *log << ": " << r.detail;
      *log << "\n";
      log->flush();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace gegenmetric
