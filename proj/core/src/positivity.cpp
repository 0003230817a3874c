#include "gegenmetric/positivity.hpp"

#include "gegenmetric/exact_linalg.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace gegenmetric {

ExactDefiniteness is_positive_definite(const RationalMatrix& m) {
  if (!m.is_symmetric()) throw PreconditionError("is_positive_definite: matrix is not symmetric");
  ExactDefiniteness out;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    RationalMatrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = m(i, j);
    const Rational minor = determinant(lead);
    if (minor <= 0) {
      out.failing_minor = static_cast<int>(k);
      out.failing_value = minor;
      return out;
    }
  }
  out.positive_definite = true;
  return out;
}

std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::positive_definite: return "positive_definite";
    case Definiteness::not_positive_definite: return "not_positive_definite";
    case Definiteness::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

NumericDefiniteness is_positive_definite(const NumericMatrix& m, int digits) {
  const auto eig = sym_eigen(m, digits);
  PrecisionGuard guard(working_digits(digits));
  Real norm = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) norm += m.entries(i, j) * m.entries(i, j);
  norm = sqrt(norm);

  NumericDefiniteness out;
  out.tolerance = pow10_neg(digits - 8) * norm;
  out.min_eigenvalue = eig.values.empty() ? Real(0) : eig.values.front();
  const Real band = 10 * out.tolerance;
  if (out.min_eigenvalue > band) {
    out.status = Definiteness::positive_definite;
  } else if (out.min_eigenvalue < -band) {
    out.status = Definiteness::not_positive_definite;
  } else {
    out.status = Definiteness::indeterminate;
  }
  return out;
}

void ParameterLine::validate(int N) const {
  if (base.size() != static_cast<std::size_t>(N) ||
      direction.size() != static_cast<std::size_t>(N)) {
    throw PreconditionError("parameter line: base and direction need " + std::to_string(N) +
                            " entries");
  }
  if (std::all_of(direction.begin(), direction.end(), [](const Rational& d) { return d == 0; })) {
    throw PreconditionError("parameter line: direction must not be the zero vector");
  }
  if (grid_points < 2) throw PreconditionError("parameter line: grid needs at least 2 points");
  if (!(t_min < t_max)) throw PreconditionError("parameter line: range must satisfy t_min < t_max");
}

Rational ParameterLine::t(int index) const {
  return t_min + (t_max - t_min) * Rational(index, grid_points - 1);
}

std::vector<Rational> ParameterLine::kappa(const Rational& t) const {
  std::vector<Rational> k(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) k[j] = base[j] + t * direction[j];
  return k;
}

bool ParameterLine::sign_flip_symmetric() const {
  for (std::size_t j = 0; j < base.size(); ++j) {
    const bool odd_position = j % 2 == 0;  // 1-based position j+1 is odd
    if (odd_position && direction[j] != 0) return false;
    if (!odd_position && base[j] != 0) return false;
  }
  return true;
}

ParameterLine toy_line(const Rational& a0) {
  ParameterLine line;
  line.base = {2 * a0 * a0, Rational(0), Rational(0)};
  line.direction = {Rational(0), 2 * a0, Rational(0)};
  return line;
}

ParameterLine default_line(int N, const Rational& a0) {
  if (N < 1) throw PreconditionError("N must be at least 1");
  ParameterLine line;
  line.base.assign(static_cast<std::size_t>(N), Rational(0));
  line.direction.assign(static_cast<std::size_t>(N), Rational(0));
  line.base[0] = 2 * a0 * a0;
  if (N >= 2) {
    line.direction[1] = 2 * a0;
  } else {
    line.direction[0] = 1;
  }
  return line;
}

Rational default_refine_tol() { return Rational(1, Integer("1000000000000")); }

namespace {

NumericMatrix metric_at(const std::vector<RationalMatrix>& basis, const ParameterLine& line,
                        const Rational& t, int digits) {
  return to_numeric(combine(basis, line.kappa(t)), digits);
}

bool positive_at(const std::vector<RationalMatrix>& basis, const ParameterLine& line,
                 const Rational& t, int digits) {
  return is_positive_definite(metric_at(basis, line, t, digits), digits).status ==
         Definiteness::positive_definite;
}

BoundaryBracket refine(const std::vector<RationalMatrix>& basis, const ParameterLine& line,
                       Rational inside, Rational outside, int digits, const Rational& tol) {
  while (abs(inside - outside) >= tol) {
    const Rational mid = (inside + outside) / 2;
    if (positive_at(basis, line, mid, digits)) {
      inside = mid;
    } else {
      outside = mid;
    }
  }
  return {inside, outside};
}

void check_basis(const std::vector<RationalMatrix>& basis, const ParameterLine& line) {
  if (basis.empty()) throw PreconditionError("empty metric basis");
  line.validate(static_cast<int>(basis.size()));
}

void check_coupling(const Rational& a0) {
  if (a0 <= 0) throw PreconditionError("coupling a must be positive, got " + to_string(a0));
}

}  // namespace

DomainScan scan_domain(const std::vector<RationalMatrix>& basis, const Rational& a0,
                       const ParameterLine& line, int digits, const Rational& refine_tol) {
  check_basis(basis, line);
  if (refine_tol <= 0) throw PreconditionError("refine_tol must be positive");
  DomainScan scan;
  scan.N = static_cast<int>(basis.size());
  scan.a0 = a0;
  scan.line = line;
  scan.digits = digits;
  scan.refine_tol = refine_tol;

  std::vector<bool> inside;
  for (int i = 0; i < line.grid_points; ++i) {
    const Rational t = line.t(i);
    const NumericMatrix theta = metric_at(basis, line, t, digits);
    auto eig = sym_eigen(theta, digits);
    inside.push_back(is_positive_definite(theta, digits).status ==
                     Definiteness::positive_definite);
    scan.t.push_back(t);
    scan.curves.push_back(std::move(eig.values));
  }

  const int last = line.grid_points - 1;
  for (int i = 0; i <= last;) {
    if (!inside[static_cast<std::size_t>(i)]) {
      ++i;
      continue;
    }
    int j = i;
    while (j < last && inside[static_cast<std::size_t>(j) + 1]) ++j;
    PositivityInterval interval;
    if (i == 0) {
      interval.open_at_lower_edge = true;
      interval.lo = line.t_min;
    } else {
      interval.lower = refine(basis, line, scan.t[static_cast<std::size_t>(i)],
                              scan.t[static_cast<std::size_t>(i) - 1], digits, refine_tol);
      interval.lo = interval.lower->estimate();
      interval.open_at_lower_edge = interval.lo - line.t_min < refine_tol;
    }
    if (j == last) {
      interval.open_at_upper_edge = true;
      interval.hi = line.t_max;
    } else {
      interval.upper = refine(basis, line, scan.t[static_cast<std::size_t>(j)],
                              scan.t[static_cast<std::size_t>(j) + 1], digits, refine_tol);
      interval.hi = interval.upper->estimate();
      interval.open_at_upper_edge = line.t_max - interval.hi < refine_tol;
    }
    scan.intervals.push_back(std::move(interval));
    i = j + 1;
  }
  return scan;
}

DomainScan scan_domain(int N, Convention convention, const Rational& a0, const ParameterLine& line,
                       int digits, const Rational& refine_tol) {
  check_coupling(a0);
  line.validate(N);
  DomainScan scan =
      scan_domain(pseudometric_basis(N, convention).at(a0), a0, line, digits, refine_tol);
  scan.convention = convention;
  return scan;
}

CurveTable eigencurves(const std::vector<RationalMatrix>& basis, const Rational& a0,
                       const ParameterLine& line, int digits, bool log_scale,
                       CurveOrdering ordering) {
  check_basis(basis, line);
  CurveTable table;
  table.N = static_cast<int>(basis.size());
  table.ordering = ordering;
  table.a0 = a0;
  table.line = line;
  table.digits = digits;
  table.log_scale = log_scale;
  const std::size_t n = basis.size();

  // dTheta/dt is constant along the line.
  RationalMatrix derivative(n, n, Rational(0));
  for (std::size_t b = 0; b < n; ++b) {
    if (line.direction[b] == 0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) derivative(i, j) += line.direction[b] * basis[b](i, j);
  }
  const NumericMatrix d_theta = to_numeric(derivative, digits);

  Matrix<Real> previous_vectors;
  for (int i = 0; i < line.grid_points; ++i) {
    const Rational t = line.t(i);
    SymmetricEigen eig = sym_eigen(metric_at(basis, line, t, digits), digits, true);
    PrecisionGuard guard(working_digits(digits));

    // order[k] = eigenpair index assigned to curve k.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (ordering == CurveOrdering::tracked && i > 0) {
      struct Overlap {
        Real value;
        std::size_t curve, pair;
      };
      std::vector<Overlap> overlaps;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          Real dot = 0;
          for (std::size_t r = 0; r < n; ++r) dot += previous_vectors(r, k) * eig.vectors(r, m);
          overlaps.push_back({abs(dot), k, m});
        }
      std::stable_sort(overlaps.begin(), overlaps.end(),
                       [](const Overlap& x, const Overlap& y) { return x.value > y.value; });
      std::vector<bool> curve_done(n, false), pair_done(n, false);
      for (const auto& o : overlaps) {
        if (curve_done[o.curve] || pair_done[o.pair]) continue;
        order[o.curve] = o.pair;
        curve_done[o.curve] = pair_done[o.pair] = true;
      }
    }

    std::vector<Real> values(n), slopes(n);
    std::vector<bool> marks(n, false);
    Matrix<Real> vectors(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t m = order[k];
      for (std::size_t r = 0; r < n; ++r) vectors(r, k) = eig.vectors(r, m);
      Real slope = 0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          slope += eig.vectors(r, m) * d_theta.entries(r, c) * eig.vectors(c, m);
      slopes[k] = slope;
      values[k] = eig.values[m];
      marks[k] = values[k] <= 0;
      if (log_scale && !marks[k]) values[k] = log(values[k]);
    }
    previous_vectors = std::move(vectors);
    table.t.push_back(t);
    table.values.push_back(std::move(values));
    table.nonpositive.push_back(std::move(marks));
    table.slopes.push_back(std::move(slopes));
  }
  return table;
}

CurveTable eigencurves(int N, Convention convention, const Rational& a0, const ParameterLine& line,
                       int digits, bool log_scale, CurveOrdering ordering) {
  check_coupling(a0);
  line.validate(N);
  return eigencurves(pseudometric_basis(N, convention).at(a0), a0, line, digits, log_scale,
                     ordering);
}

std::string to_csv(const CurveTable& table) {
  std::ostringstream out;
  out << "t";
  for (int j = 1; j <= table.N; ++j) out << ",p" << j;
  out << "\n";
  PrecisionGuard guard(working_digits(table.digits));
  for (std::size_t i = 0; i < table.t.size(); ++i) {
    out << format_real(to_real(table.t[i]), table.digits);
    for (std::size_t j = 0; j < table.values[i].size(); ++j) {
      out << ",";
      if (table.log_scale && table.nonpositive[i][j]) {
        out << "nan";
      } else {
        out << format_real(table.values[i][j], table.digits);
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string to_svg(const CurveTable& table) {
  constexpr double kWidth = 640, kHeight = 480, kMargin = 60;
  const auto t_lo = table.line.t_min.convert_to<double>();
  const auto t_hi = table.line.t_max.convert_to<double>();
  double y_lo = 0, y_hi = 0;
  bool first = true;
  for (std::size_t i = 0; i < table.values.size(); ++i)
    for (std::size_t j = 0; j < table.values[i].size(); ++j) {
      if (table.log_scale && table.nonpositive[i][j]) continue;
      const double v = table.values[i][j].convert_to<double>();
      y_lo = first ? v : std::min(y_lo, v);
      y_hi = first ? v : std::max(y_hi, v);
      first = false;
    }
  if (y_hi - y_lo < 1e-300) {
    y_lo -= 1;
    y_hi += 1;
  }
  const auto px = [&](double t) {
    return kMargin + (t - t_lo) / (t_hi - t_lo) * (kWidth - 2 * kMargin);
  };
  const auto py = [&](double y) {
    return kHeight - kMargin - (y - y_lo) / (y_hi - y_lo) * (kHeight - 2 * kMargin);
  };
  char buf[256];
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<g stroke=\"black\" stroke-width=\"1\">\n";
  std::snprintf(buf, sizeof buf, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\"/>\n",
                kMargin, kHeight - kMargin, kWidth - kMargin, kHeight - kMargin);
  svg << buf;
  std::snprintf(buf, sizeof buf, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\"/>\n",
                kMargin, kMargin, kMargin, kHeight - kMargin);
  svg << buf << "</g>\n";
  std::snprintf(buf, sizeof buf,
                "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"14\" "
                "text-anchor=\"middle\">g</text>\n",
                kWidth / 2, kHeight - kMargin / 3);
  svg << buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"14\" "
                "text-anchor=\"middle\" transform=\"rotate(-90 %.2f %.2f)\">%s</text>\n",
                kMargin / 3, kHeight / 2, kMargin / 3, kHeight / 2,
                table.log_scale ? "ln p(g)" : "p(g)");
  svg << buf;
  const auto tick = [&](double x, double y, const char* anchor, double value) {
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"11\" "
                  "text-anchor=\"%s\">%.4g</text>\n",
                  x, y, anchor, value);
    svg << buf;
  };
  tick(px(t_lo), kHeight - kMargin + 16, "middle", t_lo);
  tick(px(t_hi), kHeight - kMargin + 16, "middle", t_hi);
  tick(kMargin - 6, py(y_lo), "end", y_lo);
  tick(kMargin - 6, py(y_hi), "end", y_hi);

  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                  "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};
  for (int j = 0; j < table.N; ++j) {
    svg << "<polyline fill=\"none\" stroke-width=\"1.5\" stroke=\"" << kColors[j % 10]
        << "\" points=\"";
    for (std::size_t i = 0; i < table.t.size(); ++i) {
      const auto col = static_cast<std::size_t>(j);
      if (table.log_scale && table.nonpositive[i][col]) continue;
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(table.t[i].convert_to<double>()),
                    py(table.values[i][col].convert_to<double>()));
      svg << buf;
    }
    svg << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

Hermitization hermitize(const NumericMatrix& H, const NumericMatrix& theta, int digits) {
  if (H.size() != theta.size() || !H.entries.is_square()) {
    throw PreconditionError("hermitize: dimension mismatch");
  }
  const auto verdict = is_positive_definite(theta, digits);
  if (verdict.status == Definiteness::indeterminate) {
    throw IndeterminateError("hermitize: positive definiteness of the metric is indeterminate");
  }
  if (verdict.status != Definiteness::positive_definite) {
    throw PreconditionError("hermitize: metric is not positive definite");
  }
  const auto eig = sym_eigen(theta, digits, true);
  PrecisionGuard guard(working_digits(digits));
  const std::size_t n = H.size();
  const Matrix<Real>& v = eig.vectors;

  Matrix<Real> omega(n, n, Real(0));
  Matrix<Real> omega_inv(n, n, Real(0));
  for (std::size_t k = 0; k < n; ++k) {
    const Real root = sqrt(eig.values[k]);
    const Real inv_root = 1 / root;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Real vv = v(i, k) * v(j, k);
        omega(i, j) += root * vv;
        omega_inv(i, j) += inv_root * vv;
      }
  }
  // Exact symmetry of the stored root.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      omega(j, i) = omega(i, j);
      omega_inv(j, i) = omega_inv(i, j);
    }

  const Matrix<Real> h = omega * H.entries * omega_inv;
  const Matrix<Real> square = omega * omega;

  Hermitization out{NumericMatrix{omega, true, digits}, NumericMatrix{h, false, digits}, Real(0),
                    Real(0), digits};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.symmetry_defect = std::max(out.symmetry_defect, Real(abs(h(i, j) - h(j, i))));
      out.root_defect = std::max(out.root_defect, Real(abs(square(i, j) - theta.entries(i, j))));
    }
  return out;
}

}  // namespace gegenmetric
