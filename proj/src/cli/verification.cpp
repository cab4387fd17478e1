#include "ampoly/cli/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "ampoly/bargmann_transform.hpp"
#include "ampoly/generating_functions.hpp"
#include "ampoly/measures_quadrature.hpp"
#include "ampoly/polynomials.hpp"

namespace ampoly::cli {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

using Clock = std::chrono::steady_clock;
using Reports = std::vector<VerificationReport>;

class Recorder {
 public:
  Recorder(std::string id, double tolerance) : start_(Clock::now()) {
    report_.identity_id = std::move(id);
    report_.tolerance = tolerance;
  }

  void add(std::string point, double residual) {
    report_.sample_points.push_back(std::move(point));
    report_.residuals.push_back(residual);
  }

  VerificationReport finish(std::optional<double> tolerance_override) {
    if (tolerance_override) report_.tolerance = *tolerance_override;
    const bool finite = std::all_of(report_.residuals.begin(), report_.residuals.end(),
                                    [](double r) { return std::isfinite(r); });
    report_.passed = finite && !report_.residuals.empty() &&
                     report_.max_residual() < report_.tolerance;
    report_.runtime_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  VerificationReport report_;
  Clock::time_point start_;
};

std::string label(const char* fmt, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, fmt, a);
  return buf;
}

std::string label(const char* fmt, double a, double b) {
  char buf[96];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return buf;
}

std::string label(const char* fmt, double a, double b, double c) {
  char buf[96];
  std::snprintf(buf, sizeof buf, fmt, a, b, c);
  return buf;
}

double relative(double value, double reference) {
  const double diff = std::abs(value - reference);
  return diff == 0.0 ? 0.0 : diff / std::abs(reference);
}

double relative(Complex value, Complex reference) {
  const double diff = std::abs(value - reference);
  return diff == 0.0 ? 0.0 : diff / std::abs(reference);
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

const std::vector<double> kGfX{-3.0, -1.5, 0.0, 1.5, 3.0};
const std::vector<double> kGfT{-0.9, -0.6, -0.3, 0.1, 0.4, 0.7, 0.9};

const std::vector<double> kKernelXi{0.0, 1.0, -1.0, 3.0, -3.0};
const std::vector<Complex> kKernelZ{{0.5, 0.0}, {0.3, 0.4}, {-1.0, 1.0}, {0.0, -2.0}, {1.2, -1.5}};
const std::vector<Complex> kTransformZ{{0.3, 0.0}, {0.0, 0.5}, {0.2, 0.4}};

std::function<double(double)> basis(int n) {
  return [n](double x) { return assoc_mp_eval(n, x); };
}

void gf_suite(Reports& out, std::optional<double> tol) {
  Recorder closed("gf.closed_vs_series", 1e-8);
  Recorder ode("gf.ode_closed_form", 1e-8);
  Recorder ode_series("gf.ode_truncated_series", 1e-8);
  Recorder long_form("gf.long_form", 1e-10);
  for (double x : kGfX) {
    for (double t : kGfT) {
      const std::string at = label("x=%g,t=%g", x, t);
      const double g = gf_closed(GFPoint(x, t));
      closed.add(at, relative(g, gf_series(x, t, 200)));
      ode.add(at, gf_ode_residual_closed(x, t));
      if (std::abs(t) <= 0.8) ode_series.add(at, gf_ode_residual(x, t, 200));
      long_form.add(at, relative(gf_closed_long_form(GFPoint(x, t)), g));
    }
  }
  out.push_back(closed.finish(tol));
  out.push_back(ode.finish(tol));
  out.push_back(ode_series.finish(tol));
  out.push_back(long_form.finish(tol));

  Recorder relation("gf.egf_relation", 1e-8);
  for (double x : kGfX) {
    for (double t : {-0.6, -0.3, 0.1, 0.4, 0.65}) {
      relation.add(label("x=%g,t=%g", x, t), gf_relation_residual(x, t));
    }
  }
  out.push_back(relation.finish(tol));

  Recorder egf("gf.egf_closed_vs_series", 1e-8);
  for (double x : kGfX) {
    for (double t : {-1.0, -0.5, 0.3, 0.8, 1.0}) {
      egf.add(label("x=%g,t=%g", x, t), relative(egf_closed(x, t), egf_series(x, t, 300)));
    }
  }
  out.push_back(egf.finish(tol));

  Recorder zero("gf.zero_argument", 1e-10);
  for (double t : {-0.8, -0.5, -0.2, 0.2, 0.5, 0.8}) {
    zero.add(label("t=%g", t), relative(gf_closed(GFPoint(0.0, t)), gf_at_zero_argument(t)));
  }
  out.push_back(zero.finish(tol));

  Recorder classical("gf.classical", 1e-10);
  for (double y : {-1.0, 0.0, 1.0}) {
    for (double t : {-0.5, 0.3, 0.6}) {
      const std::vector<double> p = classical_mp_sequence(199, y);
      double series = 0.0;
      for (int n = 199; n >= 0; --n) series = series * t + p[n];
      classical.add(label("y=%g,t=%g", y, t), relative(classical_gf(y, t), series));
    }
  }
  out.push_back(classical.finish(tol));

  Recorder coefficients("gf.coefficient_extraction", 1e-6);
  const std::vector<double> xs{0.0, 1.0, -1.0, 2.0, -2.0};
  std::vector<std::vector<double>> extracted;
  for (double x : xs) extracted.push_back(gf_extracted_coefficients(x, 12));
  for (int n = 0; n <= 12; ++n) {
    double scale = 0.0;
    for (double x : xs) scale = std::max(scale, std::abs(assoc_mp_eval(n, x)));
    for (std::size_t j = 0; j < xs.size(); ++j) {
      coefficients.add(label("x=%g,n=%g", xs[j], n),
                       std::abs(extracted[j][n] - assoc_mp_eval(n, xs[j])) / scale);
    }
  }
  out.push_back(coefficients.finish(tol));
}

void corollary41_suite(Reports& out, std::optional<double> tol) {
  Recorder r("corollary41.identity", 1e-10);
  for (int k = 0; k <= 20; ++k) {
    const double t = -0.9 + 0.09 * k;
    r.add(label("t=%g", t), corollary41_residual(t));
  }
  out.push_back(r.finish(tol));
}

void remark41_suite(Reports& out, std::optional<double> tol) {
  Recorder closed("remark41.closed_vs_2f1", 1e-10);
  for (int k = 0; k <= 10; ++k) {
    const double xi = 0.05 + 0.09 * k;
    closed.add(label("xi=%g", xi),
               relative(remark41_closed_2f1(xi), gauss_2f1(2.0, 2.0, 2.5, xi).real()));
  }
  out.push_back(closed.finish(tol));

  Recorder half("remark41.value_at_half", 1e-10);
  half.add("series", std::abs(gauss_2f1(2.0, 2.0, 2.5, 0.5) - 3.0));
  half.add("closed", std::abs(remark41_closed_2f1(0.5) - 3.0));
  out.push_back(half.finish(tol));
}

void appendix_suite(Reports& out, std::optional<double> tol) {
  Recorder delta("appendixA.delta_closed_vs_series", 1e-10);
  for (double xi : {0.0, 1.0, -1.0, 2.0, -2.0}) {
    const Complex c = (3.0 + kI * kSqrt2 * xi) / 2.0;
    for (double s : {0.1, 0.25, 0.4}) {
      const Complex t = kI * s;
      delta.add(label("xi=%g,t=%gi", xi, s),
                relative(delta_closed(t, c, 0.5), delta_series(t, c, 0.5)));
    }
  }
  out.push_back(delta.finish(tol));

  Recorder egf("appendixA.mp_shifted_egf", 1e-10);
  const std::vector<std::pair<double, Complex>> egf_points{
      {0.0, {0.0, 0.4}}, {1.3, {0.2, 0.1}}, {-2.0, {0.5, -0.3}}, {0.7, {-0.8, 0.6}}};
  for (const auto& [xi, w] : egf_points) {
    const std::vector<double> p = classical_mp_sequence(41, xi / kSqrt2);
    Complex direct = 0.0;
    for (int n = 39; n >= 0; --n) direct = direct * w / (n + 2.0) + p[n + 1];
    egf.add(label("xi=%g,w=%g%+gi", xi, w.real(), w.imag()),
            relative(mp_shifted_egf(xi, w), direct));
  }
  out.push_back(egf.finish(tol));

  // Lambda splits into the classical part F/(sqrt2 xi - i) times the shifted
  // generating function, and (F - delta(i w / 2, c; 1/2)) / (w (sqrt2 xi - i)).
  Recorder split("appendixA.kernel_assembly", 1e-10);
  for (double xi : kKernelXi) {
    const Complex c = (3.0 + kI * kSqrt2 * xi) / 2.0;
    const Complex hyp = gauss_2f1(1.0, 1.0, c, 0.5);
    const Complex denom = kSqrt2 * xi - kI;
    for (const Complex& w : kKernelZ) {
      const Complex assembled = hyp / denom * mp_shifted_egf(xi, w) +
                                (hyp - delta_closed(kI * w / 2.0, c, 0.5)) / (w * denom);
      split.add(label("xi=%g,w=%g%+gi", xi, w.real(), w.imag()),
                relative(assembled, lambda_series(xi, w, 60)));
    }
  }
  out.push_back(split.finish(tol));
}

void orthonormality_suite(Reports& out, std::optional<double> tol) {
  const QuadratureGrid grid = build_hermite_style_grid(kDefaultWeightNodes);

  Recorder mass("orthonormality.weight_mass", 1e-8);
  mass.add(label("nodes=%g", static_cast<double>(grid.size())),
           std::abs(grid.integrate([](double x) { return weight_omega(x); }) - 1.0));
  out.push_back(mass.finish(tol));

  Recorder gram("orthonormality.gram_defect", 1e-7);
  const Eigen::MatrixXd g = orthonormality_matrix(10, grid);
  for (int m = 0; m <= 10; ++m) {
    double row = 0.0;
    for (int n = 0; n <= 10; ++n) row = std::max(row, std::abs(g(m, n) - (m == n ? 1.0 : 0.0)));
    gram.add(label("row=%g", m), row);
  }
  out.push_back(gram.finish(tol));

  Recorder symmetry("orthonormality.weight_symmetry", 1e-12);
  for (int k = 1; k <= 100; ++k) {
    const double x = 0.2 * k;
    symmetry.add(label("x=%g", x), relative(weight_omega(-x), weight_omega(x)));
  }
  out.push_back(symmetry.finish(tol));
}

void moments_suite(Reports& out, std::optional<double> tol) {
  const QuadratureGrid radial = build_radial_grid();

  Recorder kernel("moments.radial_kernel", 1e-6);
  Recorder low("moments.radial_kernel_low_order", 1e-8);
  for (int n = 0; n <= 6; ++n) {
    const double r = radial_moment_residual(n, radial);
    kernel.add(label("n=%g", n), r);
    if (n <= 3) low.add(label("n=%g", n), r);
  }
  out.push_back(kernel.finish(tol));
  out.push_back(low.finish(tol));

  Recorder normalized("moments.resolution_dA_over_2pi", 1e-6);
  Recorder lebesgue("moments.resolution_dA_gives_2pi", 1e-6);
  for (int n = 0; n <= 6; ++n) {
    normalized.add(label("n=%g", n),
                   std::abs(resolution_diagonal_ratio(n, radial, AreaMeasure::lebesgue_over_2pi) - 1.0));
    lebesgue.add(label("n=%g", n),
                 std::abs(resolution_diagonal_ratio(n, radial, AreaMeasure::lebesgue) / (2.0 * kPi) - 1.0));
  }
  out.push_back(normalized.finish(tol));
  out.push_back(lebesgue.finish(tol));

  Recorder series("moments.normalization_series", 1e-12);
  for (int k = 0; k <= 10; ++k) {
    const double u = 0.5 * k;
    double direct = 0.0;
    double term = 1.0;
    for (int n = 0; n < 30; ++n) {
      direct += term;
      term *= u / ((n + 2.0) * (n + 2.0));
    }
    series.add(label("u=%g", u), relative(nlcs_normalization(u), direct));
  }
  out.push_back(series.finish(tol));
}

void kernel_suite(Reports& out, std::optional<double> tol) {
  Recorder wave("kernel.wavefunction_closed_vs_series", 1e-8);
  Recorder lambda("kernel.lambda_closed_vs_series", 1e-8);
  for (double xi : kKernelXi) {
    for (const Complex& z : kKernelZ) {
      const std::string at = label("xi=%g,z=%g%+gi", xi, z.real(), z.imag());
      wave.add(at, std::abs(nlcs_wavefunction_closed(xi, z) - nlcs_wavefunction_series(xi, z, 60)));
      lambda.add(at, std::abs(bargmann_kernel(z, xi) - lambda_series(xi, z, 60)));
    }
  }
  out.push_back(wave.finish(tol));
  out.push_back(lambda.finish(tol));

  Recorder coefficients("kernel.lambda_derivative_coefficients", 1e-5);
  const std::vector<double> xis{0.0, 1.0, -1.0};
  std::vector<std::vector<double>> derived;
  for (double xi : xis) derived.push_back(lambda_derivative_coefficients(xi, 6));
  for (int n = 0; n <= 6; ++n) {
    double scale = 0.0;
    for (double xi : xis) scale = std::max(scale, std::abs(assoc_mp_eval(n, xi)));
    for (std::size_t j = 0; j < xis.size(); ++j) {
      coefficients.add(label("xi=%g,n=%g", xis[j], n),
                       std::abs(derived[j][n] - assoc_mp_eval(n, xis[j])) / scale);
    }
  }
  out.push_back(coefficients.finish(tol));
}

void transform_suite(Reports& out, std::optional<double> tol) {
  const QuadratureGrid grid = build_hermite_style_grid(kDefaultWeightNodes);
  const BargmannTransform transform(grid);

  Recorder diagonal("transform.diagonality", 1e-5);
  for (int n = 0; n <= 6; ++n) {
    for (const Complex& z : kTransformZ) {
      const Complex expected = std::pow(z, n) / factorial(n + 1);
      diagonal.add(label("n=%g,z=%g%+gi", n, z.real(), z.imag()),
                   relative(transform(basis(n), z), expected));
    }
  }
  out.push_back(diagonal.finish(tol));

  Recorder analytic("transform.cauchy_riemann", 1e-5);
  for (int n = 0; n <= 6; ++n) {
    const auto image = [&, n](Complex z) { return transform(basis(n), z); };
    for (const Complex& z : {Complex(0.2, 0.3), Complex(-0.4, 0.1)}) {
      analytic.add(label("n=%g,z=%g%+gi", n, z.real(), z.imag()),
                   cauchy_riemann_residual(image, z, 1e-3));
    }
  }
  out.push_back(analytic.finish(tol));

  Recorder linear("transform.linearity", 1e-12);
  for (const Complex& z : kTransformZ) {
    const Complex sum = transform([](double x) { return assoc_mp_eval(1, x) + assoc_mp_eval(2, x); }, z);
    linear.add(label("z=%g%+gi", z.real(), z.imag()),
               relative(sum, transform(basis(1), z) + transform(basis(2), z)));
  }
  out.push_back(linear.finish(tol));

  const QuadratureGrid radial = build_radial_grid(12.0);
  // the extra |z|^2 in the printed density needs the longer radial cut
  const QuadratureGrid radial_long = build_radial_grid();
  Recorder norm("transform.norm_dA_over_2pi", 1e-3);
  Recorder printed("transform.norm_as_printed_gives_2pi_(n+2)^2", 1e-3);
  for (int n : {0, 1, 3}) {
    norm.add(label("f=p%g", n),
             transform_norm_residual(basis(n), radial, 64, grid, NormConvention::consistent).residual);
    const NormCheck check =
        transform_norm_residual(basis(n), radial_long, 64, grid, NormConvention::as_printed);
    const double factor = 2.0 * kPi * (n + 2.0) * (n + 2.0);
    printed.add(label("f=p%g", n),
                std::abs(check.image_norm_sq / check.input_norm_sq / factor - 1.0));
  }
  out.push_back(norm.finish(tol));
  out.push_back(printed.finish(tol));
}

double explicit_list(int n, double x) {
  switch (n) {
    case 0: return 1.0;
    case 1: return x / kSqrt2;
    case 2: return x * x / 3.0 - 2.0 / 3.0;
    case 3: return kSqrt2 / 12.0 * x * x * x - 13.0 / (12.0 * kSqrt2) * x;
    default: return x * x * x * x / 30.0 - 29.0 / 60.0 * x * x + 8.0 / 15.0;
  }
}

void polynomial_suite(Reports& out, std::optional<double> tol) {
  Recorder list("polynomials.explicit_list", 1e-12);
  for (int n = 0; n <= 4; ++n) {
    for (double x : {-3.5, -2.5, -1.0, -0.3, 0.0, 0.7, 1.2, 2.2, 4.0}) {
      list.add(label("n=%g,x=%g", n, x), relative(assoc_mp_eval(n, x), explicit_list(n, x)));
    }
  }
  out.push_back(list.finish(tol));

  Recorder det("polynomials.determinant_vs_recurrence", 1e-9);
  Recorder expl("polynomials.explicit_formula_vs_recurrence", 1e-9);
  for (int n = 1; n <= 15; ++n) {
    double scale = 0.0;
    for (int k = 0; k <= 20; ++k) scale = std::max(scale, std::abs(assoc_mp_eval(n, -5.0 + 0.5 * k)));
    for (int k = 0; k <= 20; ++k) {
      const double x = -5.0 + 0.5 * k;
      const double p = assoc_mp_eval(n, x);
      det.add(label("n=%g,x=%g", n, x), std::abs(assoc_mp_via_det(n, x) - p) / scale);
      expl.add(label("n=%g,x=%g", n, x), std::abs(assoc_mp_explicit(n, x) - p) / scale);
    }
  }
  out.push_back(det.finish(tol));
  out.push_back(expl.finish(tol));

  Recorder zeros("polynomials.zero_values", 1e-12);
  for (int n = 0; n <= 40; ++n) {
    const double p = assoc_mp_eval(n, 0.0);
    const double expected = zero_value_closed_form(n);
    zeros.add(label("n=%g", n), n % 2 == 1 ? std::abs(p) : relative(p, expected));
  }
  out.push_back(zeros.finish(tol));

  Recorder roots("polynomials.jacobi_eigenvalues_are_roots", 1e-9);
  for (int n : {2, 5, 10, 20}) {
    const std::vector<double> lambda = jacobi_eigen_roots(n);
    const double span = std::max(std::abs(lambda.front()), std::abs(lambda.back()));
    double scale = 0.0;
    for (int k = 0; k <= 2000; ++k) {
      scale = std::max(scale, std::abs(assoc_mp_eval(n, -span + span * k / 1000.0)));
    }
    double worst = 0.0;
    for (double root : lambda) worst = std::max(worst, std::abs(assoc_mp_eval(n, root)));
    roots.add(label("n=%g", n), worst / scale);
  }
  out.push_back(roots.finish(tol));

  Recorder monic("polynomials.monic_scaling", 1e-12);
  for (int n = 0; n <= 12; n += 3) {
    for (double x : {-2.3, 0.9, 3.1}) {
      monic.add(label("n=%g,x=%g", n, x),
                relative(monic_q_eval(n, x), monic_scale(n) * assoc_mp_eval(n, x)));
    }
  }
  out.push_back(monic.finish(tol));
}

}  // namespace

double VerificationReport::max_residual() const {
  double worst = 0.0;
  for (double r : residuals) {
    if (!std::isfinite(r)) return r;
    worst = std::max(worst, r);
  }
  return worst;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "gf",     "corollary41", "remark41",  "appendixA",   "orthonormality",
      "moments", "kernel",     "transform", "polynomials", "all"};
  return names;
}

Suite parse_suite(std::string_view name) {
  const auto& names = suite_names();
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (names[k] == name) return static_cast<Suite>(k);
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

const char* suite_name(Suite suite) {
  return suite_names().at(static_cast<std::size_t>(suite)).c_str();
}

std::vector<VerificationReport> run_suite(Suite suite,
                                          std::optional<double> tolerance_override) {
  Reports out;
  const auto& tol = tolerance_override;
  switch (suite) {
    case Suite::gf: gf_suite(out, tol); break;
    case Suite::corollary41: corollary41_suite(out, tol); break;
    case Suite::remark41: remark41_suite(out, tol); break;
    case Suite::appendixA: appendix_suite(out, tol); break;
    case Suite::orthonormality: orthonormality_suite(out, tol); break;
    case Suite::moments: moments_suite(out, tol); break;
    case Suite::kernel: kernel_suite(out, tol); break;
    case Suite::transform: transform_suite(out, tol); break;
    case Suite::polynomials: polynomial_suite(out, tol); break;
    case Suite::all:
      for (Suite s : {Suite::polynomials, Suite::gf, Suite::corollary41, Suite::remark41,
                      Suite::appendixA, Suite::orthonormality, Suite::moments, Suite::kernel,
                      Suite::transform}) {
        Reports part = run_suite(s, tolerance_override);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
      }
      break;
  }
  return out;
}

}  // namespace ampoly::cli
