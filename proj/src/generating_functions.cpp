#include "ampoly/generating_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ampoly/polynomials.hpp"

namespace ampoly {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

// Degree used by the small-|t| fallback; |t| < 1e-3 makes t^24 negligible.
constexpr int kFallbackTerms = 24;

double real_or_throw(Complex value, const char* where) {
  if (std::abs(value.imag()) >= 1e-9 * (1.0 + std::abs(value.real()))) {
    throw ResidualImaginary(std::string(where) + ": imaginary residue " +
                            std::to_string(value.imag()));
  }
  return value.real();
}

Complex series_value(double x, Complex t, int n_terms) {
  const std::vector<double> p = assoc_mp_sequence(n_terms - 1, x);
  Complex acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

// Term of G_x(t) that multiplies the exponential, common to both closed forms.
Complex exponential_branch(double s, Complex t, const SeriesControl& ctrl) {
  const Complex c = (3.0 + kI * s) / 2.0;
  return gauss_2f1(1.0, 1.0, c, 0.5, ctrl) / (s - kI) *
         std::exp(s * std::atan(t)) / (t * std::sqrt(1.0 + t * t));
}

}  // namespace

GFPoint::GFPoint(double x, double t) : x_(x), t_(t) {
  if (!std::isfinite(x) || !(std::abs(t) < 1.0)) {
    throw DomainViolation("GFPoint: requires finite x and |t| < 1");
  }
}

Complex gf_closed_complex(double x, Complex t, const SeriesControl& ctrl) {
  if (!(std::abs(t) < 1.0)) {
    throw DomainViolation("gf_closed_complex: requires |t| < 1");
  }
  if (std::abs(t) < kGfSeriesFallback) return series_value(x, t, kFallbackTerms);
  const double s = kSqrt2 * x;
  const Complex c = (3.0 + kI * s) / 2.0;
  return gauss_2f1(1.0, 1.0, c, (1.0 + kI * t) / 2.0, ctrl) / (t * (kI - s)) +
         exponential_branch(s, t, ctrl);
}

double gf_closed(const GFPoint& p, const SeriesControl& ctrl) {
  return real_or_throw(gf_closed_complex(p.x(), p.t(), ctrl), "gf_closed");
}

double gf_closed_long_form(const GFPoint& p, const SeriesControl& ctrl) {
  const double s = kSqrt2 * p.x();
  const double t = p.t();
  if (std::abs(t) < kGfSeriesFallback) {
    return series_value(p.x(), t, kFallbackTerms).real();
  }
  const double pole = t * (s - t);
  if (std::abs(pole) < 1e-8) {
    throw PoleInput("gf_closed_long_form: t sits on sqrt2 x");
  }
  const Complex hyp =
      gauss_2f1(2.0, 2.0, (5.0 + kI * s) / 2.0, (1.0 + kI * t) / 2.0, ctrl);
  const Complex value = -1.0 / pole +
                        (t * t + 1.0) * hyp / (pole * (1.0 + kI * s) * (3.0 + kI * s)) +
                        exponential_branch(s, t, ctrl);
  return real_or_throw(value, "gf_closed_long_form");
}

double gf_series(double x, double t, int n_terms) {
  if (n_terms < 1) throw std::invalid_argument("gf_series: n_terms must be >= 1");
  if (!(std::abs(t) < 1.0)) throw DomainViolation("gf_series: requires |t| < 1");
  return series_value(x, t, n_terms).real();
}

double egf_closed(double x, double t, const SeriesControl& ctrl) {
  if (!(std::abs(t) <= 1.4)) {
    throw DomainViolation("egf_closed: requires |t| <= 1.4");
  }
  const double s = kSqrt2 * x;
  const Complex hyp = gauss_2f1(2.0, 2.0, (5.0 + kI * s) / 2.0,
                                0.5 + kI * t / (2.0 * kSqrt2), ctrl);
  const Complex first = hyp / ((1.0 + kI * s) * (3.0 + kI * s));
  const Complex second = gauss_2f1(1.0, 1.0, (3.0 + kI * s) / 2.0, 0.5, ctrl) *
                         (4.0 * x - 2.0 * t) * std::exp(s * std::atan(t / kSqrt2)) /
                         ((s - kI) * std::pow(t * t + 2.0, 1.5));
  return real_or_throw(first + second, "egf_closed");
}

double egf_series(double x, double t, int n_terms) {
  if (n_terms < 1) throw std::invalid_argument("egf_series: n_terms must be >= 1");
  // b_n = q_n / n!, so b_{n+1} = (x b_n - ((n+1)^2 / 2) b_{n-1} / n) / (n+1)
  double b_prev = 0.0;
  double b = 1.0;
  double power = 1.0;
  double sum = 0.0;
  for (int n = 0; n < n_terms; ++n) {
    sum += b * power;
    power *= t;
    const double coupling = n == 0 ? 0.0 : 0.5 * (n + 1.0) * (n + 1.0) * b_prev / n;
    const double next = (x * b - coupling) / (n + 1.0);
    b_prev = b;
    b = next;
  }
  return sum;
}

double gf_relation_residual(double x, double t, const SeriesControl& ctrl) {
  const double s = kSqrt2 * x;
  if (std::abs(t * (s - t)) < 1e-8) {
    throw PoleInput("gf_relation_residual: t (sqrt2 x - t) vanishes");
  }
  if (!(std::abs(t) < 0.7)) {
    throw DomainViolation("gf_relation_residual: requires 0 < |t| < 0.7");
  }
  const double lhs = gf_closed(GFPoint(x, t), ctrl);
  const double rhs = (t * t + 1.0) / (s * t - t * t) * egf_closed(x, kSqrt2 * t, ctrl) +
                     1.0 / (t * t - s * t);
  return std::abs(lhs - rhs);
}

double gf_ode_residual(double x, double t, int n_terms) {
  if (n_terms < 1) throw std::invalid_argument("gf_ode_residual: n_terms must be >= 1");
  if (!(std::abs(t) <= 0.8)) throw DomainViolation("gf_ode_residual: requires |t| <= 0.8");
  const std::vector<double> p = assoc_mp_sequence(n_terms - 1, x);
  double g = 0.0;
  double dg = 0.0;
  for (int n = n_terms - 1; n >= 0; --n) {
    g = g * t + p[n];
    if (n >= 1) dg = dg * t + n * p[n];
  }
  const double s = kSqrt2 * x;
  return std::abs((t * t * t + t) * dg + (2.0 * t * t - s * t + 1.0) * g - 1.0);
}

double gf_ode_residual_closed(double x, double t, const SeriesControl& ctrl) {
  if (!(std::abs(t) <= 0.9)) {
    throw DomainViolation("gf_ode_residual_closed: requires |t| <= 0.9");
  }
  constexpr double radius = 0.04;
  constexpr int samples = 32;
  // G' = (1 / (2 pi i)) \oint G(s) / (s - t)^2 ds, trapezoid in the angle
  Complex derivative = 0.0;
  for (int k = 0; k < samples; ++k) {
    const Complex e = std::polar(1.0, 2.0 * kPi * k / samples);
    derivative += gf_closed_complex(x, t + radius * e, ctrl) / e;
  }
  derivative /= radius * samples;
  const double g = gf_closed(GFPoint(x, t), ctrl);
  const double s = kSqrt2 * x;
  return std::abs((t * t * t + t) * derivative.real() + (2.0 * t * t - s * t + 1.0) * g - 1.0);
}

double corollary41_residual(double t, const SeriesControl& ctrl) {
  if (!(std::abs(t) < 1.0)) {
    throw DomainViolation("corollary41_residual: requires |t| < 1");
  }
  const Complex lhs = gauss_2f1(2.0, 2.0, 2.5, (1.0 + kI * t) / 2.0, ctrl);
  const double r = std::sqrt(t * t + 1.0);
  const Complex rhs =
      3.0 / (t * t + 1.0) * (t / r * (kI * (kPi / 2.0) - std::log(t + r)) + 1.0);
  return std::abs(lhs - rhs);
}

double remark41_closed_2f1(double xi) {
  if (!(xi > 0.0 && xi < 1.0)) {
    throw DomainViolation("remark41_closed_2f1: requires 0 < xi < 1");
  }
  const double root = std::sqrt(xi * (1.0 - xi));
  return 3.0 / (4.0 * xi * (1.0 - xi)) *
         (1.0 - (1.0 - 2.0 * xi) / root * std::asin(std::sqrt(xi)));
}

double classical_gf(double y, double t) {
  if (!(std::abs(t) < 1.0)) throw DomainViolation("classical_gf: requires |t| < 1");
  return std::exp(2.0 * y * std::atan(t)) / std::sqrt(1.0 + t * t);
}

double gf_at_zero_argument(double t) {
  if (t == 0.0) return 1.0;
  return std::asinh(t) / (t * std::sqrt(t * t + 1.0));
}

std::vector<double> gf_extracted_coefficients(double x, int n_max,
                                              const SeriesControl& ctrl) {
  const int samples = std::max(64, 2 * (n_max + 1));
  const auto coeffs = cauchy_taylor_coefficients(
      [&](Complex t) { return gf_closed_complex(x, t, ctrl); }, n_max, 0.5, samples);
  std::vector<double> out;
  out.reserve(coeffs.size());
  for (const Complex& c : coeffs) out.push_back(c.real());
  return out;
}

}  // namespace ampoly
