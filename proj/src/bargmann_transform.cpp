#include "ampoly/bargmann_transform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ampoly/errors.hpp"
#include "ampoly/polynomials.hpp"

namespace ampoly {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
// Series length used below the fallback radius; |z|^12 is far below 1e-60.
constexpr int kFallbackTerms = 12;
// Taylor length for the norm check; the a_n of degree <= 10 inputs vanish
// beyond that, and this covers them with room for quadrature leakage.
constexpr int kNormTaylorTerms = 40;

Complex kernel_parameter(double xi) { return (3.0 + kI * kSqrt2 * xi) / 2.0; }

// Closed Lambda(xi, w) given the precomputed F = 2F1(1, 1; c; 1/2).
Complex lambda_closed(double xi, Complex w, Complex hyp, const SeriesControl& ctrl) {
  const Complex c = kernel_parameter(xi);
  const Complex confluent = kummer_1f1(0.5 - kI * xi / kSqrt2, 1.0, 2.0 * kI * w, ctrl);
  const Complex humbert = humbert_psi1(1.0, 1.0, c, 1.0, 0.5, kI * w, ctrl);
  return std::exp(-kI * w) / (w * (kSqrt2 * xi - kI)) * (hyp * confluent - humbert);
}

Complex lambda_any(double xi, Complex w, Complex hyp, const SeriesControl& ctrl) {
  if (std::abs(w) < kKernelSeriesFallback) return lambda_series(xi, w, kFallbackTerms);
  return lambda_closed(xi, w, hyp, ctrl);
}

Complex center_hyp(double xi, const SeriesControl& ctrl) {
  return gauss_2f1(1.0, 1.0, kernel_parameter(xi), 0.5, ctrl);
}

}  // namespace

Complex delta_series(Complex t, Complex c, Complex x, const SeriesControl& ctrl) {
  ctrl.validate();
  if (!(std::abs(x) < 1.0)) throw DomainViolation("delta_series: requires |x| < 1");
  Complex sum = 0.0;
  Complex coefficient = 1.0;  // t^n / (c)_n
  int quiet = 0;
  for (int n = 0; n < ctrl.max_terms; ++n) {
    const Complex term =
        coefficient * gauss_2f1(n + 1.0, n + 1.0, c + static_cast<double>(n), x, ctrl);
    sum += term;
    if (std::abs(term) <= ctrl.rel_tol * std::abs(sum) + ctrl.abs_floor) {
      if (++quiet == 2) return sum;
    } else {
      quiet = 0;
    }
    const Complex next_c = c + static_cast<double>(n);
    if (std::abs(next_c) == 0.0) throw PoleParameter("delta_series: (c)_n vanishes");
    coefficient *= t / next_c;
  }
  throw NonConvergence("delta_series: outer sum did not converge");
}

Complex delta_closed(Complex t, Complex c, Complex x, const SeriesControl& ctrl) {
  if (std::abs(x) == 0.0) throw DomainViolation("delta_closed: x = 0");
  if (!(std::abs(x) < 1.0)) throw DomainViolation("delta_closed: requires |x| < 1");
  return std::exp(-t / x) * humbert_psi1(1.0, 1.0, c, 1.0, x, t / x, ctrl);
}

Complex mp_shifted_egf(double xi, Complex w, const SeriesControl& ctrl) {
  if (std::abs(w) > kKernelSeriesFallback) {
    const Complex confluent =
        kummer_1f1(0.5 - kI * xi / kSqrt2, 1.0, 2.0 * kI * w, ctrl);
    return (std::exp(-kI * w) * confluent - 1.0) / w;
  }
  const std::vector<double> p = classical_mp_sequence(kFallbackTerms + 1, xi / kSqrt2);
  Complex acc = 0.0;
  for (int n = kFallbackTerms - 1; n >= 0; --n) acc = acc * w / (n + 2.0) + p[n + 1];
  return acc;
}

Complex lambda_series(double xi, Complex z, int n_terms) {
  if (n_terms < 1) throw std::invalid_argument("lambda_series: n_terms must be >= 1");
  const std::vector<double> p = assoc_mp_sequence(n_terms - 1, xi);
  // Horner on z^n / (n+1)!: acc_n = p_n + z acc_{n+1} / (n+2)
  Complex acc = 0.0;
  for (int n = n_terms - 1; n >= 0; --n) acc = p[n] + z * acc / (n + 2.0);
  return acc;
}

Complex nlcs_wavefunction_series(double xi, Complex z, int n_terms) {
  const double u = std::norm(z);
  return lambda_series(xi, std::conj(z), n_terms) / std::sqrt(nlcs_normalization(u));
}

Complex nlcs_wavefunction_closed(double xi, Complex z, const SeriesControl& ctrl) {
  const double r = std::abs(z);
  if (r < kKernelSeriesFallback) return nlcs_wavefunction_series(xi, z, kFallbackTerms);
  const Complex zbar = std::conj(z);
  const Complex c = kernel_parameter(xi);
  const Complex bracket =
      center_hyp(xi, ctrl) * kummer_1f1(0.5 - kI * xi / kSqrt2, 1.0, 2.0 * kI * zbar, ctrl) -
      humbert_psi1(1.0, 1.0, c, 1.0, 0.5, kI * zbar, ctrl);
  return z * std::exp(-kI * zbar) /
         (r * std::sqrt(bessel_i0_minus_one(2.0 * r)) * (kSqrt2 * xi - kI)) * bracket;
}

Complex bargmann_kernel(Complex z, double xi, const SeriesControl& ctrl) {
  return lambda_any(xi, z, center_hyp(xi, ctrl), ctrl);
}

KernelEval evaluate_kernel(Complex z, double xi, const SeriesControl& ctrl) {
  return {z, xi, bargmann_kernel(z, xi, ctrl)};
}

std::vector<double> lambda_derivative_coefficients(double xi, int n_max,
                                                   const SeriesControl& ctrl) {
  if (n_max < 0 || n_max > 20) {
    throw std::invalid_argument("lambda_derivative_coefficients: need 0 <= n_max <= 20");
  }
  const Complex hyp = center_hyp(xi, ctrl);
  const auto coeffs = cauchy_taylor_coefficients(
      [&](Complex z) { return lambda_closed(xi, z, hyp, ctrl); }, n_max, 0.5, 64);
  std::vector<double> out;
  double factorial = 1.0;  // (n+1)!
  for (int n = 0; n <= n_max; ++n) {
    factorial *= n + 1.0;
    out.push_back(factorial * coeffs[n].real());
  }
  return out;
}

double cauchy_riemann_residual(const std::function<Complex(Complex)>& f, Complex z,
                               double h) {
  if (!(h > 0.0)) throw std::invalid_argument("cauchy_riemann_residual: h must be > 0");
  const Complex dx = (f(z + h) - f(z - h)) / (2.0 * h);
  const Complex dy = (f(z + kI * h) - f(z - kI * h)) / (2.0 * kI * h);
  return std::abs(dx - dy);
}

BargmannTransform::BargmannTransform(QuadratureGrid grid, SeriesControl ctrl)
    : grid_(std::move(grid)), ctrl_(ctrl) {
  ctrl_.validate();
  measure_.reserve(grid_.size());
  hyp_.reserve(grid_.size());
  for (std::size_t k = 0; k < grid_.size(); ++k) {
    const double xi = grid_.nodes()[k];
    measure_.push_back(grid_.weights()[k] * weight_omega(xi, ctrl_));
    hyp_.push_back(center_hyp(xi, ctrl_));
  }
}

Complex BargmannTransform::operator()(const std::function<double(double)>& f,
                                      Complex z) const {
  Complex acc = 0.0;
  for (std::size_t k = 0; k < grid_.size(); ++k) {
    if (measure_[k] == 0.0) continue;
    const double xi = grid_.nodes()[k];
    const double fx = f(xi);
    if (fx == 0.0) continue;
    acc += measure_[k] * fx * lambda_any(xi, z, hyp_[k], ctrl_);
  }
  return acc;
}

std::vector<double> BargmannTransform::taylor_coefficients(
    const std::function<double(double)>& f, int n_terms) const {
  if (n_terms < 1) throw std::invalid_argument("taylor_coefficients: n_terms must be >= 1");
  std::vector<double> a(static_cast<std::size_t>(n_terms), 0.0);
  for (std::size_t k = 0; k < grid_.size(); ++k) {
    const double xi = grid_.nodes()[k];
    const double fx = measure_[k] * f(xi);
    if (fx == 0.0) continue;
    const std::vector<double> p = assoc_mp_sequence(n_terms - 1, xi);
    for (int n = 0; n < n_terms; ++n) a[n] += fx * p[n];
  }
  double factorial = 1.0;
  for (int n = 0; n < n_terms; ++n) {
    factorial *= n + 1.0;
    a[n] /= factorial;
  }
  return a;
}

double BargmannTransform::weighted_norm_squared(
    const std::function<double(double)>& f) const {
  double acc = 0.0;
  for (std::size_t k = 0; k < grid_.size(); ++k) {
    const double fx = f(grid_.nodes()[k]);
    acc += measure_[k] * fx * fx;
  }
  return acc;
}

Complex bargmann_transform(const std::function<double(double)>& f, Complex z,
                           const QuadratureGrid& grid, const SeriesControl& ctrl) {
  return BargmannTransform(grid, ctrl)(f, z);
}

const char* to_string(NormConvention convention) {
  switch (convention) {
    case NormConvention::consistent: return "4|z|^2 K0(2|z|) dA/(2pi)";
    case NormConvention::as_printed: return "4|z|^4 K0(2|z|) dA";
  }
  return "unknown";
}

NormCheck transform_norm_residual(const std::function<double(double)>& f,
                                  const QuadratureGrid& r_grid, int angle_count,
                                  const QuadratureGrid& x_grid,
                                  NormConvention convention, const SeriesControl& ctrl) {
  // |B|^2 carries angular frequencies below kNormTaylorTerms; the trapezoid
  // rule is exact for them with this many angles
  if (angle_count < kNormTaylorTerms) {
    throw std::invalid_argument("transform_norm_residual: need angle_count >= 40");
  }
  const BargmannTransform transform(x_grid, ctrl);
  NormCheck check;
  check.convention = convention;
  check.input_norm_sq = transform.weighted_norm_squared(f);
  if (check.input_norm_sq == 0.0) {
    check.zero_input = true;
    return check;
  }
  const std::vector<double> a = transform.taylor_coefficients(f, kNormTaylorTerms);
  const double dtheta = 2.0 * kPi / angle_count;
  double image = 0.0;
  for (std::size_t j = 0; j < r_grid.size(); ++j) {
    const double rho = r_grid.nodes()[j];
    double ring = 0.0;
    for (int k = 0; k < angle_count; ++k) {
      const Complex z = std::polar(rho, k * dtheta);
      Complex b = 0.0;
      for (int n = kNormTaylorTerms - 1; n >= 0; --n) b = b * z + a[n];
      ring += std::norm(b);
    }
    ring *= dtheta;
    const double k0 = 4.0 * macdonald_k0(2.0 * rho);
    const double density = convention == NormConvention::consistent
                               ? k0 * rho * rho / (2.0 * kPi)
                               : k0 * rho * rho * rho * rho;
    image += r_grid.weights()[j] * ring * density * rho;
  }
  check.image_norm_sq = image;
  check.residual = std::abs(check.input_norm_sq - image) / check.input_norm_sq;
  return check;
}

}  // namespace ampoly
