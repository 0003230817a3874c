#include "gegenmetric_cli/run.hpp"

#include "gegenmetric/acceptance.hpp"
#include "gegenmetric/dieudonne.hpp"
#include "gegenmetric/errors.hpp"
#include "gegenmetric/gegenbauer.hpp"
#include "gegenmetric/hamiltonian.hpp"
#include "gegenmetric/linear_form.hpp"
#include "gegenmetric/positivity.hpp"
#include "gegenmetric/symmetric_eigen.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gegenmetric::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kMaxN = 64;
constexpr int kMaxDigits = 2000;
constexpr int kMaxGrid = 100000;

// Re-thrown parse failures carry the name of the offending field.
struct FieldError : PreconditionError {
  FieldError(const std::string& field, const std::string& what)
      : PreconditionError(field + ": " + what) {}
};

template <class F>
auto for_field(const std::string& field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const FieldError&) {
    throw;
  } catch (const std::exception& e) {
    throw FieldError(field, e.what());
  }
}

Rational rational_field(const std::string& field, const std::string& text) {
  return for_field(field, [&] { return parse_rational(text); });
}

void check_N(int N, int minimum = 1) {
  if (N < minimum || N > kMaxN) {
    throw FieldError("--N", "must lie in [" + std::to_string(minimum) + ", " +
                                std::to_string(kMaxN) + "], got " + std::to_string(N));
  }
}

void check_digits(int digits) {
  if (digits < kMinDigits || digits > kMaxDigits) {
    throw FieldError("--digits", "must lie in [" + std::to_string(kMinDigits) + ", " +
                                     std::to_string(kMaxDigits) + "], got " +
                                     std::to_string(digits));
  }
}

Convention convention_field(const std::string& text) {
  return for_field("--convention", [&] { return parse_convention(text); });
}

Rational coupling_field(const std::string& text) {
  const Rational a0 = rational_field("--a", text);
  if (a0 <= 0) throw FieldError("--a", "coupling must be positive, got " + to_string(a0));
  return a0;
}

std::map<std::string, Rational> assignment_fields(const std::vector<std::string>& items) {
  std::map<std::string, Rational> values;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw FieldError("--set", "expected name=value, got '" + item + "'");
    }
    values[item.substr(0, eq)] = rational_field("--set " + item.substr(0, eq), item.substr(eq + 1));
  }
  return values;
}

std::vector<std::string> default_parameter_names(int N) {
  std::vector<std::string> names;
  for (int j = 1; j <= N; ++j) names.push_back("theta_1_" + std::to_string(j));
  return names;
}

std::vector<LinearForm> first_row_field(const RunConfig& c) {
  std::vector<LinearForm> row;
  if (!c.first_row) {
    for (const auto& name : default_parameter_names(c.N)) row.push_back(LinearForm::parameter(name));
    return row;
  }
  const auto items = split_top_level(*c.first_row);
  if (static_cast<int>(items.size()) != c.N) {
    throw FieldError("--first-row", "expected " + std::to_string(c.N) + " entries, got " +
                                        std::to_string(items.size()));
  }
  for (std::size_t j = 0; j < items.size(); ++j) {
    row.push_back(for_field("--first-row entry " + std::to_string(j + 1),
                            [&] { return parse_linear_form(items[j]); }));
  }
  return row;
}

// Comma-separated parameter-free expressions in a, evaluated at a0.
std::vector<Rational> vector_field(const std::string& field, const std::string& text,
                                   const Rational& a0) {
  std::vector<Rational> values;
  const auto items = split_top_level(text);
  for (std::size_t j = 0; j < items.size(); ++j) {
    values.push_back(for_field(field + " entry " + std::to_string(j + 1),
                               [&] { return parse_rat_func(items[j])(a0); }));
  }
  return values;
}

ParameterLine line_field(const RunConfig& c, const Rational& a0) {
  ParameterLine line;
  if (c.line == "toy") {
    line = toy_line(a0);
  } else if (c.line == "default") {
    line = default_line(c.N, a0);
  } else if (c.line == "custom") {
    if (!c.base || !c.direction) {
      throw FieldError("--line", "custom lines need both --base and --direction");
    }
    line.base = vector_field("--base", *c.base, a0);
    line.direction = vector_field("--direction", *c.direction, a0);
  } else {
    throw FieldError("--line", "expected toy, default or custom, got '" + c.line + "'");
  }
  if (c.line != "custom" && (c.base || c.direction)) {
    throw FieldError("--line", "--base/--direction require --line custom");
  }
  const auto colon = c.range.find(':');
  if (colon == std::string::npos) throw FieldError("--range", "expected lo:hi, got '" + c.range + "'");
  line.t_min = rational_field("--range", c.range.substr(0, colon));
  line.t_max = rational_field("--range", c.range.substr(colon + 1));
  if (!(line.t_min < line.t_max)) throw FieldError("--range", "lo must be below hi");
  if (c.grid < 2 || c.grid > kMaxGrid) {
    throw FieldError("--grid", "must lie in [2, " + std::to_string(kMaxGrid) + "], got " +
                                   std::to_string(c.grid));
  }
  line.grid_points = c.grid;
  for_field("--line", [&] { line.validate(c.N); return 0; });
  return line;
}

Json rational_array(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json real_array(const std::vector<Real>& v, int digits) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(format_real(x, digits));
  return out;
}

template <class T, class F>
Json matrix_json(const Matrix<T>& m, F&& cell) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(cell(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json exact_json(const RatFuncMatrix& m) {
  return matrix_json(m, [](const RatFunc& f) { return f.to_string(); });
}
Json exact_json(const RationalMatrix& m) {
  return matrix_json(m, [](const Rational& x) { return to_string(x); });
}
Json exact_json(const SymbolicMatrix& m) {
  return matrix_json(m, [](const LinearForm& f) { return f.to_string(); });
}
Json numeric_json(const Matrix<Real>& m, int digits) {
  return matrix_json(m, [digits](const Real& x) { return format_real(x, digits); });
}

Json header(const RunConfig& c) {
  Json j;
  j["schema"] = "v1";
  j["command"] = c.subcommand;
  return j;
}

Json line_json(const RunConfig& c, const ParameterLine& line) {
  Json j;
  j["kind"] = c.line;
  j["base"] = rational_array(line.base);
  j["direction"] = rational_array(line.direction);
  j["range"] = Json::array({to_string(line.t_min), to_string(line.t_max)});
  j["grid"] = line.grid_points;
  j["sign_flip_symmetric"] = line.sign_flip_symmetric();
  return j;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

// ---------------------------------------------------------------------------

std::string cmd_hamiltonian(const RunConfig& c) {
  check_N(c.N);
  const Convention conv = convention_field(c.convention);
  const RatFuncMatrix H = build_hamiltonian(c.N, conv);
  Json j = header(c);
  j["N"] = c.N;
  j["convention"] = to_string(conv);
  j["entries"] = exact_json(H);
  if (c.a_numeric) {
    check_digits(c.digits);
    const Rational a0 = coupling_field(*c.a_numeric);
    j["a"] = to_string(a0);
    j["exact"] = exact_json(evaluate(H, a0));
    j["digits"] = c.digits;
    j["numeric"] = numeric_json(instantiate_hamiltonian(H, a0, c.digits).entries, c.digits);
  }
  return j.dump(2) + "\n";
}

std::string cmd_spectrum(const RunConfig& c) {
  check_N(c.N);
  check_digits(c.digits);
  const Rational alpha = rational_field("--a", c.a);
  const EnergySpectrum s =
      for_field("--a", [&] { return secular_roots(c.N, alpha, c.digits); });
  Json j = header(c);
  j["N"] = c.N;
  j["alpha"] = to_string(alpha);
  j["digits"] = c.digits;
  j["roots"] = real_array(s.roots, c.digits);
  return j.dump(2) + "\n";
}

std::string cmd_metric(const RunConfig& c) {
  check_N(c.N);
  const Convention conv = convention_field(c.convention);
  const auto row = first_row_field(c);
  const SymbolicMatrix theta = solve_metric(c.N, conv, row);
  Json j = header(c);
  j["N"] = c.N;
  j["convention"] = to_string(conv);
  Json names = Json::array();
  {
    std::map<std::string, int> seen;
    for (const auto& f : row)
      for (const auto& [name, coeff] : f.terms()) seen[name] = 0;
    for (const auto& [name, unused] : seen) names.push_back(name);
  }
  j["parameters"] = names;
  j["first_row"] = Json::array();
  for (const auto& f : row) j["first_row"].push_back(f.to_string());
  j["entries"] = exact_json(theta);
  if (c.a_numeric) {
    check_digits(c.digits);
    const Rational a0 = coupling_field(*c.a_numeric);
    const auto values = assignment_fields(c.assignments);
    for (const auto& name : names) {
      if (!values.count(name.get<std::string>())) {
        throw FieldError("--set", "numeric output at --a needs a value for parameter '" +
                                      name.get<std::string>() + "'");
      }
    }
    RationalMatrix exact(theta.rows(), theta.cols());
    for (std::size_t r = 0; r < theta.rows(); ++r)
      for (std::size_t s = 0; s < theta.cols(); ++s)
        exact(r, s) = theta(r, s).evaluate(a0, values);
    j["a"] = to_string(a0);
    Json assigned;
    for (const auto& [name, value] : values) assigned[name] = to_string(value);
    j["values"] = assigned;
    j["exact"] = exact_json(exact);
    j["digits"] = c.digits;
    j["numeric"] = numeric_json(to_numeric(exact, c.digits).entries, c.digits);
  }
  return j.dump(2) + "\n";
}

std::string cmd_basis(const RunConfig& c) {
  check_N(c.N);
  const Convention conv = convention_field(c.convention);
  const MetricSolution sol = pseudometric_basis(c.N, conv);
  Json j = header(c);
  j["N"] = c.N;
  j["convention"] = to_string(conv);
  j["parameters"] = sol.parameter_names;
  Json basis = Json::array();
  if (c.a_numeric) {
    const Rational a0 = coupling_field(*c.a_numeric);
    j["a"] = to_string(a0);
    for (const auto& m : sol.at(a0)) basis.push_back(exact_json(m));
  } else {
    for (const auto& m : sol.basis) basis.push_back(exact_json(m));
  }
  j["basis"] = basis;
  return j.dump(2) + "\n";
}

SymbolicMatrix read_theta_file(const std::string& path, int N) {
  std::ifstream in(path);
  if (!in) throw FieldError("--theta", "cannot open '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const std::exception& e) {
    throw FieldError("--theta", std::string("invalid JSON: ") + e.what());
  }
  const Json& entries = doc.contains("entries") ? doc["entries"] : doc;
  if (!entries.is_array() || static_cast<int>(entries.size()) != N) {
    throw FieldError("--theta", "expected an " + std::to_string(N) + "x" + std::to_string(N) +
                                    " array of entry strings");
  }
  SymbolicMatrix theta(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
  for (int r = 0; r < N; ++r) {
    const Json& row = entries[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != N) {
      throw FieldError("--theta", "row " + std::to_string(r + 1) + " has the wrong length");
    }
    for (int s = 0; s < N; ++s) {
      const Json& cell = row[static_cast<std::size_t>(s)];
      if (!cell.is_string()) {
        throw FieldError("--theta", "entry (" + std::to_string(r + 1) + "," +
                                        std::to_string(s + 1) + ") is not a string");
      }
      theta(static_cast<std::size_t>(r), static_cast<std::size_t>(s)) = for_field(
          "--theta entry (" + std::to_string(r + 1) + "," + std::to_string(s + 1) + ")",
          [&] { return parse_linear_form(cell.get<std::string>()); });
    }
  }
  return theta;
}

std::string cmd_residual(const RunConfig& c) {
  check_N(c.N);
  const Convention conv = convention_field(c.convention);
  const RatFuncMatrix H = build_hamiltonian(c.N, conv);
  const SymbolicMatrix theta =
      c.theta_file ? read_theta_file(*c.theta_file, c.N) : solve_metric(H, first_row_field(c));
  const SymbolicMatrix r = residual(H, theta);
  bool zero = true;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t k = 0; k < r.cols(); ++k) zero = zero && r(i, k).is_zero();
  Json j = header(c);
  j["N"] = c.N;
  j["convention"] = to_string(conv);
  j["zero"] = zero;
  j["residual"] = exact_json(r);
  return j.dump(2) + "\n";
}

std::string cmd_domain(const RunConfig& c) {
  check_N(c.N);
  check_digits(c.digits);
  const Convention conv = convention_field(c.convention);
  const Rational a0 = coupling_field(c.a);
  const ParameterLine line = line_field(c, a0);
  const Rational tol = rational_field("--refine-tol", c.refine_tol);
  if (tol <= 0) throw FieldError("--refine-tol", "must be positive");
  const DomainScan scan = scan_domain(c.N, conv, a0, line, c.digits, tol);

  Json j = header(c);
  j["N"] = c.N;
  j["convention"] = to_string(conv);
  j["a0"] = to_string(a0);
  j["line"] = line_json(c, line);
  j["digits"] = c.digits;
  j["refine_tol"] = to_string(tol);
  Json intervals = Json::array();
  Json details = Json::array();
  for (const auto& iv : scan.intervals) {
    const Rational lo = iv.lower ? iv.lower->estimate() : iv.lo;
    const Rational hi = iv.upper ? iv.upper->estimate() : iv.hi;
    intervals.push_back(Json::array({to_double(lo), to_double(hi)}));
    Json d;
    auto bracket = [](const std::optional<BoundaryBracket>& b) -> Json {
      if (!b) return nullptr;
      return Json{{"inside", to_string(b->inside)}, {"outside", to_string(b->outside)}};
    };
    d["lower"] = bracket(iv.lower);
    d["upper"] = bracket(iv.upper);
    d["open_at_lower_edge"] = iv.open_at_lower_edge;
    d["open_at_upper_edge"] = iv.open_at_upper_edge;
    details.push_back(std::move(d));
  }
  j["intervals"] = intervals;
  j["boundaries"] = details;
  return j.dump(2) + "\n";
}

std::string cmd_curves(const RunConfig& c) {
  check_N(c.N);
  check_digits(c.digits);
  const Convention conv = convention_field(c.convention);
  const Rational a0 = coupling_field(c.a);
  const ParameterLine line = line_field(c, a0);
  CurveOrdering ordering;
  if (c.ordering == "tracked") {
    ordering = CurveOrdering::tracked;
  } else if (c.ordering == "ascending") {
    ordering = CurveOrdering::ascending;
  } else {
    throw FieldError("--ordering", "expected tracked or ascending, got '" + c.ordering + "'");
  }
  const CurveTable table = eigencurves(c.N, conv, a0, line, c.digits, c.log_scale, ordering);
  if (c.format == "csv") return to_csv(table);
  if (c.format == "svg") return to_svg(table);
  if (c.format != "json") {
    throw FieldError("--format", "expected json, csv or svg, got '" + c.format + "'");
  }
  Json j = header(c);
  j["N"] = c.N;
  j["convention"] = to_string(conv);
  j["a0"] = to_string(a0);
  j["line"] = line_json(c, line);
  j["digits"] = c.digits;
  j["log"] = c.log_scale;
  j["ordering"] = c.ordering;
  j["t"] = rational_array(table.t);
  Json curves = Json::array();
  for (int k = 0; k < c.N; ++k) {
    Json curve = Json::array();
    for (std::size_t i = 0; i < table.t.size(); ++i) {
      if (table.nonpositive[i][static_cast<std::size_t>(k)] && c.log_scale) {
        curve.push_back(nullptr);
      } else {
        curve.push_back(format_real(table.values[i][static_cast<std::size_t>(k)], c.digits));
      }
    }
    curves.push_back(std::move(curve));
  }
  j["curves"] = curves;
  return j.dump(2) + "\n";
}

std::string cmd_hermitize(const RunConfig& c) {
  check_N(c.N);
  check_digits(c.digits);
  const Convention conv = convention_field(c.convention);
  const Rational a0 = coupling_field(c.a);
  const auto row = first_row_field(c);
  const auto values = assignment_fields(c.assignments);
  std::vector<Rational> kappa;
  for (std::size_t k = 0; k < row.size(); ++k) {
    for (const auto& [name, coeff] : row[k].terms()) {
      if (!values.count(name)) {
        throw FieldError("--set", "hermitize needs a value for parameter '" + name + "'");
      }
    }
    kappa.push_back(for_field("--first-row entry " + std::to_string(k + 1),
                              [&] { return row[k].evaluate(a0, values); }));
  }
  const RatFuncMatrix Hs = build_hamiltonian(c.N, conv);
  const RationalMatrix H = evaluate(Hs, a0);
  const RationalMatrix theta = solve_metric(H, kappa);
  const Hermitization herm =
      hermitize(to_numeric(H, c.digits), to_numeric(theta, c.digits), c.digits);

  PrecisionGuard guard(working_digits(c.digits));
  const SymmetricEigen spectrum_h = sym_eigen(symmetrized(herm.h.entries, c.digits), c.digits, false);
  Json j = header(c);
  j["N"] = c.N;
  j["convention"] = to_string(conv);
  j["a"] = to_string(a0);
  j["digits"] = c.digits;
  j["first_row"] = rational_array(kappa);
  j["theta"] = exact_json(theta);
  j["omega"] = numeric_json(herm.omega.entries, c.digits);
  j["h"] = numeric_json(herm.h.entries, c.digits);
  j["spectrum"] = real_array(spectrum_h.values, c.digits);
  j["symmetry_defect"] = format_real(herm.symmetry_defect, 6);
  j["root_defect"] = format_real(herm.root_defect, 6);
  return j.dump(2) + "\n";
}

std::string cmd_verify(const RunConfig& c, std::ostream& err, bool& all_passed) {
  std::ostringstream log;
  const auto results = run_acceptance(c.format == "json" ? nullptr : &log);
  all_passed = true;
  for (const auto& r : results) all_passed = all_passed && r.passed;
  if (c.format != "json") return log.str();
  Json j = header(c);
  Json list = Json::array();
  for (const auto& r : results) {
    list.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  j["criteria"] = list;
  j["passed"] = all_passed;
  (void)err;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

void add_N(CLI::App* sub, RunConfig& c) {
  sub->add_option("--N", c.N, "Lattice dimension")->required();
}
void add_convention(CLI::App* sub, RunConfig& c) {
  sub->add_option("--convention", c.convention, "displayed | recurrence")
      ->capture_default_str();
}
void add_digits(CLI::App* sub, RunConfig& c) {
  sub->add_option("--digits", c.digits, "Decimal digits (env GEGENMETRIC_DIGITS)")
      ->capture_default_str();
}
void add_row(CLI::App* sub, RunConfig& c) {
  sub->add_option("--first-row", c.first_row,
                  "Comma-separated first-row expressions (default theta_1_1,...)");
  sub->add_option("--set", c.assignments, "Parameter value name=p/q (repeatable)");
}
void add_line(CLI::App* sub, RunConfig& c) {
  sub->add_option("--line", c.line, "toy | default | custom")->capture_default_str();
  sub->add_option("--base", c.base, "Custom line base (comma-separated, may use a)");
  sub->add_option("--direction", c.direction, "Custom line direction");
  sub->add_option("--range", c.range, "Parameter range lo:hi")->capture_default_str();
  sub->add_option("--grid", c.grid, "Grid points")->capture_default_str();
}

}  // namespace

int default_digits() {
  if (const char* env = std::getenv("GEGENMETRIC_DIGITS")) {
    try {
      std::size_t used = 0;
      const int d = std::stoi(env, &used);
      if (used == std::string(env).size() && d >= kMinDigits && d <= kMaxDigits) return d;
    } catch (const std::exception&) {
    }
  }
  return kDefaultDigits;
}

ParseResult parse_command_line(int argc, const char* const* argv, std::ostream& out,
                               std::ostream& err) {
  RunConfig c;
  c.digits = default_digits();
  CLI::App app{"Hilbert-space metrics for Gegenbauer lattice Hamiltonians", "gegenmetric"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-o,--output", c.output, "Write the artifact to this file");

  auto* ham = app.add_subcommand("hamiltonian", "Exact tridiagonal Hamiltonian");
  add_N(ham, c);
  add_convention(ham, c);
  add_digits(ham, c);
  ham->add_option("--a", c.a_numeric, "Instantiate at this coupling");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Roots of the Gegenbauer secular polynomial");
  add_N(spectrum_cmd, c);
  add_digits(spectrum_cmd, c);
  spectrum_cmd->add_option("--a", c.a, "Gegenbauer parameter alpha = a")->capture_default_str();

  auto* met = app.add_subcommand("metric", "Metric with a given first row");
  add_N(met, c);
  add_convention(met, c);
  add_digits(met, c);
  add_row(met, c);
  met->add_option("--a", c.a_numeric, "Evaluate at this coupling (needs --set values)");

  auto* bas = app.add_subcommand("basis", "Pseudometric basis P_1..P_N");
  add_N(bas, c);
  add_convention(bas, c);
  bas->add_option("--a", c.a_numeric, "Evaluate at this coupling");

  auto* res = app.add_subcommand("residual", "Exact residual H^T Theta - Theta H");
  add_N(res, c);
  add_convention(res, c);
  add_row(res, c);
  res->add_option("--theta", c.theta_file, "JSON file with an 'entries' matrix of strings");

  auto* dom = app.add_subcommand("domain", "Positivity intervals along a parameter line");
  add_N(dom, c);
  add_convention(dom, c);
  add_digits(dom, c);
  add_line(dom, c);
  dom->add_option("--a", c.a, "Coupling")->capture_default_str();
  dom->add_option("--refine-tol", c.refine_tol, "Boundary refinement tolerance")
      ->capture_default_str();

  auto* cur = app.add_subcommand("curves", "Metric eigenvalue curves along a parameter line");
  add_N(cur, c);
  add_convention(cur, c);
  add_digits(cur, c);
  add_line(cur, c);
  cur->add_option("--a", c.a, "Coupling")->capture_default_str();
  cur->add_flag("--log", c.log_scale, "Natural-log ordinate");
  cur->add_option("--ordering", c.ordering, "tracked | ascending")->capture_default_str();
  cur->add_option("--format", c.format, "json | csv | svg")->capture_default_str();

  auto* her = app.add_subcommand("hermitize", "Symmetric partner h = Omega H Omega^-1");
  add_N(her, c);
  add_convention(her, c);
  add_digits(her, c);
  add_row(her, c);
  her->add_option("--a", c.a, "Coupling")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "Run the acceptance suite");
  std::string verify_format = "text";
  ver->add_option("--format", verify_format, "text | json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return {std::nullopt, app.exit(e, out, err)};
  } catch (const CLI::CallForAllHelp& e) {
    return {std::nullopt, app.exit(e, out, err)};
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return {std::nullopt, kPrecondition};
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  if (c.subcommand == "verify") c.format = verify_format;
  return {c, kSuccess};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  int code = kSuccess;
  std::string artifact;
  try {
    const std::string& s = config.subcommand;
    if (s == "hamiltonian") {
      artifact = cmd_hamiltonian(config);
    } else if (s == "spectrum") {
      artifact = cmd_spectrum(config);
    } else if (s == "metric") {
      artifact = cmd_metric(config);
    } else if (s == "basis") {
      artifact = cmd_basis(config);
    } else if (s == "residual") {
      artifact = cmd_residual(config);
    } else if (s == "domain") {
      artifact = cmd_domain(config);
    } else if (s == "curves") {
      artifact = cmd_curves(config);
    } else if (s == "hermitize") {
      artifact = cmd_hermitize(config);
    } else if (s == "verify") {
      bool passed = false;
      artifact = cmd_verify(config, err, passed);
      if (!passed) code = kFailure;
    } else {
      err << "error: subcommand: unknown '" << s << "'\n";
      return kPrecondition;
    }
  } catch (const IndeterminateError& e) {
    err << "error: indeterminate: " << e.what() << "\n";
    return kIndeterminate;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const DivisionByZeroError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const DegeneratePivotError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }

  if (config.output) {
    std::ofstream file(*config.output, std::ios::binary);
    if (!file) {
      err << "error: --output: cannot open '" << *config.output << "'\n";
      return kPrecondition;
    }
    file << artifact;
  } else {
    out << artifact;
  }
  return code;
}

}  // namespace gegenmetric::cli
