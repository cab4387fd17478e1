#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "ampoly/errors.hpp"

namespace ampoly {

using Complex = std::complex<double>;

/// Truncation policy shared by every infinite series in the library.
///
/// A series stops once two consecutive terms satisfy
/// |term| <= rel_tol * |partial sum| + abs_floor. Running out of max_terms
/// first raises NonConvergence.
struct SeriesControl {
  double rel_tol = 1e-12;
  double abs_floor = 1e-300;
  int max_terms = 10000;

  /// Throws std::invalid_argument unless 0 < rel_tol < 1, abs_floor >= 0
  /// and max_terms >= 8.
  void validate() const;
};

/// Rising factorial a(a+1)...(a+n-1); 1 for n == 0.
Complex pochhammer(Complex a, int n);

/// Gauss 2F1(a, b; c; z) by its power series, |z| < 1.
///
/// Symmetric in (a, b) bit for bit. Throws PoleParameter when c is a
/// non-positive integer, DomainViolation for |z| >= 1 and NonConvergence
/// when ctrl.max_terms is exhausted.
Complex gauss_2f1(Complex a, Complex b, Complex c, Complex z,
                  const SeriesControl& ctrl = {});

/// Kummer 1F1(a; c; z) by its power series.
Complex kummer_1f1(Complex a, Complex c, Complex z,
                   const SeriesControl& ctrl = {});

/// Humbert's confluent double series
///   Psi1(alpha, beta; gamma, gamma'; x, y)
///     = sum_{m,n} (alpha)_{m+n} (beta)_m / ((gamma)_m (gamma')_n)
///                 x^m / m!  y^n / n!,
/// summed along anti-diagonals m + n = k. Stops after three consecutive
/// diagonals whose absolute contribution is below the relative tolerance.
/// Requires |x| < 1.
Complex humbert_psi1(Complex alpha, Complex beta, Complex gamma,
                     Complex gamma_p, Complex x, Complex y,
                     const SeriesControl& ctrl = {});

/// Modified Bessel function I0. Throws Overflow past the double range.
double bessel_i0(double u);

/// I0(u) - 1 without the cancellation of the subtraction for small u.
double bessel_i0_minus_one(double u);

/// MacDonald function K0 for u > 0; DomainViolation otherwise.
double macdonald_k0(double u);

/// |Gamma(3/2 + i y)|^2 = pi (1/4 + y^2) / cosh(pi y). Underflows to 0 for
/// large |y| instead of overflowing.
double gamma_abs_sq_3half(double y);

/// Left-hand side of the three-term contiguous relation
///   z(1-z)(a+1)(b+1) F(a+2,b+2;c+2;z) + (c-(a+b+1)z)(c+1) F(a+1,b+1;c+1;z)
///     - c(c+1) F(a,b;c;z),
/// which vanishes identically. Used as a residual probe on gauss_2f1.
Complex contiguous_f_residual(Complex a, Complex b, Complex c, Complex z,
                              const SeriesControl& ctrl = {});

/// Largest magnitude among the three terms of contiguous_f_residual, the
/// natural scale for judging its size.
double contiguous_f_scale(Complex a, Complex b, Complex c, Complex z,
                          const SeriesControl& ctrl = {});

/// Taylor coefficients a_0..a_{n_max} of a function analytic on the closed
/// disc of the given radius about 0, from `samples` equispaced points on the
/// circle (trapezoidal Cauchy integral). samples must exceed n_max.
std::vector<Complex> cauchy_taylor_coefficients(
    const std::function<Complex(Complex)>& f, int n_max, double radius,
    int samples);

}  // namespace ampoly
