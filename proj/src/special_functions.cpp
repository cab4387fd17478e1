#include "ampoly/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace ampoly {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;

// Past this argument the I0 power series is replaced by its asymptotic
// expansion, whose smallest term there is ~exp(-2u) relative.
constexpr double kI0SeriesLimit = 30.0;
// K0 switches from the logarithmic series to Steed's continued fraction.
constexpr double kK0SeriesLimit = 2.0;

bool is_nonpositive_integer(Complex c) {
  return c.imag() == 0.0 && c.real() <= 0.0 && c.real() == std::round(c.real());
}

void require_regular(Complex c, const char* where) {
  if (is_nonpositive_integer(c)) {
    throw PoleParameter(std::string(where) + ": lower parameter " +
                        std::to_string(c.real()) + " is a non-positive integer");
  }
}

// Lexicographic order on (re, im); used to put symmetric parameters in a
// canonical order before summing.
bool lex_less(Complex lhs, Complex rhs) {
  if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
  return lhs.imag() < rhs.imag();
}

bool small_enough(double term_abs, double sum_abs, const SeriesControl& ctrl) {
  return term_abs <= ctrl.rel_tol * sum_abs + ctrl.abs_floor;
}

[[noreturn]] void fail_convergence(const char* where, const SeriesControl& ctrl) {
  throw NonConvergence(std::string(where) + ": no convergence within " +
                       std::to_string(ctrl.max_terms) + " terms");
}

double i0_series_tail(double u) {
  // sum_{k>=1} (u^2/4)^k / (k!)^2
  const double q = 0.25 * u * u;
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (term <= 1e-17 * sum) break;
  }
  return sum;
}

double i0_asymptotic(double u) {
  // e^u / sqrt(2 pi u) * sum_k ((2k-1)!!)^2 / (k! (8u)^k)
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * odd * odd / (8.0 * k * u);
    if (next >= term) break;  // asymptotic series started to diverge
    term = next;
    sum += term;
    if (term <= 1e-17 * sum) break;
  }
  const double half = std::exp(0.5 * u);
  const double value = half * (half / std::sqrt(2.0 * kPi * u) * sum);
  if (!std::isfinite(value)) {
    throw Overflow("bessel_i0: argument " + std::to_string(u) +
                   " overflows double precision");
  }
  return value;
}

double k0_series(double u) {
  // K0(u) = -(ln(u/2) + gamma) I0(u) + sum_{k>=1} (u^2/4)^k / (k!)^2 H_k
  const double q = 0.25 * u * u;
  double term = 1.0;
  double harmonic = 0.0;
  double i0 = 1.0;
  double correction = 0.0;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<double>(k) * k);
    harmonic += 1.0 / k;
    i0 += term;
    correction += term * harmonic;
    if (term * harmonic <= 1e-17 * correction) break;
  }
  return -(std::log(0.5 * u) + kEulerGamma) * i0 + correction;
}

double k0_steed(double u) {
  // Steed's evaluation of the second continued fraction (Temme), order 0.
  constexpr double eps = 1e-16;
  double b = 2.0 * (1.0 + u);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 1; i < 100000; ++i) {
    a -= 2 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < eps) {
      return std::sqrt(kPi / (2.0 * u)) * std::exp(-u) / s;
    }
  }
  throw NonConvergence("macdonald_k0: continued fraction failed at u = " +
                       std::to_string(u));
}

}  // namespace

void SeriesControl::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw std::invalid_argument("SeriesControl: rel_tol must lie in (0, 1)");
  }
  if (!(abs_floor >= 0.0)) {
    throw std::invalid_argument("SeriesControl: abs_floor must be >= 0");
  }
  if (max_terms < 8) {
    throw std::invalid_argument("SeriesControl: max_terms must be >= 8");
  }
}

Complex pochhammer(Complex a, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative length");
  Complex product = 1.0;
  for (int k = 0; k < n; ++k) product *= a + static_cast<double>(k);
  return product;
}

Complex gauss_2f1(Complex a, Complex b, Complex c, Complex z,
                  const SeriesControl& ctrl) {
  ctrl.validate();
  require_regular(c, "gauss_2f1");
  if (!(std::abs(z) < 1.0)) {
    throw DomainViolation("gauss_2f1: series needs |z| < 1");
  }
  if (lex_less(b, a)) std::swap(a, b);

  Complex term = 1.0;
  Complex sum = 1.0;
  int quiet = 0;
  for (int n = 0; n < ctrl.max_terms; ++n) {
    const double dn = n;
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
    sum += term;
    if (small_enough(std::abs(term), std::abs(sum), ctrl)) {
      if (++quiet == 2) return sum;
    } else {
      quiet = 0;
    }
  }
  fail_convergence("gauss_2f1", ctrl);
}

Complex kummer_1f1(Complex a, Complex c, Complex z, const SeriesControl& ctrl) {
  ctrl.validate();
  require_regular(c, "kummer_1f1");

  Complex term = 1.0;
  Complex sum = 1.0;
  int quiet = 0;
  for (int n = 0; n < ctrl.max_terms; ++n) {
    const double dn = n;
    term *= (a + dn) / ((c + dn) * (dn + 1.0)) * z;
    sum += term;
    if (small_enough(std::abs(term), std::abs(sum), ctrl)) {
      if (++quiet == 2) return sum;
    } else {
      quiet = 0;
    }
  }
  fail_convergence("kummer_1f1", ctrl);
}

Complex humbert_psi1(Complex alpha, Complex beta, Complex gamma,
                     Complex gamma_p, Complex x, Complex y,
                     const SeriesControl& ctrl) {
  ctrl.validate();
  require_regular(gamma, "humbert_psi1");
  require_regular(gamma_p, "humbert_psi1");
  if (!(std::abs(x) < 1.0)) {
    throw DomainViolation("humbert_psi1: series needs |x| < 1");
  }

  // diagonal[m] holds the (m, k - m) term of the current anti-diagonal.
  std::vector<Complex> diagonal{Complex(1.0)};
  std::vector<Complex> next;
  Complex sum = 1.0;
  int quiet = 0;
  for (int k = 1; k < ctrl.max_terms; ++k) {
    next.assign(static_cast<std::size_t>(k) + 1, Complex(0.0));
    double magnitude = 0.0;
    Complex contribution = 0.0;
    for (int m = 0; m < k; ++m) {
      const double n = k - m;  // step n-1 -> n at fixed m
      next[m] = diagonal[m] * (alpha + (m + n - 1.0)) /
                ((gamma_p + (n - 1.0)) * n) * y;
    }
    {
      const double m = k;  // step (k-1, 0) -> (k, 0)
      next[k] = diagonal[k - 1] * (alpha + (m - 1.0)) * (beta + (m - 1.0)) /
                ((gamma + (m - 1.0)) * m) * x;
    }
    for (const Complex& t : next) {
      contribution += t;
      magnitude += std::abs(t);
    }
    sum += contribution;
    diagonal.swap(next);
    if (small_enough(magnitude, std::abs(sum), ctrl)) {
      if (++quiet == 3) return sum;
    } else {
      quiet = 0;
    }
  }
  fail_convergence("humbert_psi1", ctrl);
}

double bessel_i0(double u) {
  if (!std::isfinite(u)) throw DomainViolation("bessel_i0: non-finite argument");
  const double au = std::abs(u);
  if (au <= kI0SeriesLimit) return 1.0 + i0_series_tail(au);
  return i0_asymptotic(au);
}

double bessel_i0_minus_one(double u) {
  if (!std::isfinite(u)) {
    throw DomainViolation("bessel_i0_minus_one: non-finite argument");
  }
  const double au = std::abs(u);
  if (au <= kI0SeriesLimit) return i0_series_tail(au);
  return i0_asymptotic(au) - 1.0;
}

double macdonald_k0(double u) {
  if (!(u > 0.0)) {
    throw DomainViolation("macdonald_k0: requires u > 0");
  }
  if (std::isinf(u)) return 0.0;
  return u <= kK0SeriesLimit ? k0_series(u) : k0_steed(u);
}

double gamma_abs_sq_3half(double y) {
  // pi (1/4 + y^2) / cosh(pi y) written with e^{-pi|y|} so it cannot overflow
  const double e = std::exp(-kPi * std::abs(y));
  return 2.0 * kPi * (0.25 + y * y) * e / (1.0 + e * e);
}

namespace {

struct ContiguousTerms {
  Complex upper;
  Complex middle;
  Complex lower;
};

ContiguousTerms contiguous_terms(Complex a, Complex b, Complex c, Complex z,
                                 const SeriesControl& ctrl) {
  const Complex f0 = gauss_2f1(a, b, c, z, ctrl);
  const Complex f1 = gauss_2f1(a + 1.0, b + 1.0, c + 1.0, z, ctrl);
  const Complex f2 = gauss_2f1(a + 2.0, b + 2.0, c + 2.0, z, ctrl);
  return {z * (1.0 - z) * (a + 1.0) * (b + 1.0) * f2,
          (c - (a + b + 1.0) * z) * (c + 1.0) * f1, -c * (c + 1.0) * f0};
}

}  // namespace

Complex contiguous_f_residual(Complex a, Complex b, Complex c, Complex z,
                              const SeriesControl& ctrl) {
  const ContiguousTerms t = contiguous_terms(a, b, c, z, ctrl);
  return t.upper + t.middle + t.lower;
}

double contiguous_f_scale(Complex a, Complex b, Complex c, Complex z,
                          const SeriesControl& ctrl) {
  const ContiguousTerms t = contiguous_terms(a, b, c, z, ctrl);
  return std::max({std::abs(t.upper), std::abs(t.middle), std::abs(t.lower)});
}

std::vector<Complex> cauchy_taylor_coefficients(
    const std::function<Complex(Complex)>& f, int n_max, double radius,
    int samples) {
  if (n_max < 0 || samples <= n_max || !(radius > 0.0)) {
    throw std::invalid_argument(
        "cauchy_taylor_coefficients: need n_max >= 0, samples > n_max, "
        "radius > 0");
  }
  std::vector<Complex> values(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    const double theta = 2.0 * kPi * j / samples;
    values[j] = f(std::polar(radius, theta));
  }
  std::vector<Complex> coeffs(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    Complex acc = 0.0;
    for (int j = 0; j < samples; ++j) {
      // angle reduced mod 2 pi through the integer product
      const long idx = (static_cast<long>(j) * n) % samples;
      acc += values[j] * std::polar(1.0, -2.0 * kPi * idx / samples);
    }
    coeffs[n] = acc / (samples * std::pow(radius, n));
  }
  return coeffs;
}

}  // namespace ampoly
