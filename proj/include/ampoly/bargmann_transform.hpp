#pragma once

#include <functional>
#include <vector>

#include "ampoly/measures_quadrature.hpp"
#include "ampoly/special_functions.hpp"

namespace ampoly {

/// Below this |z| the closed kernels, which carry removable 1/z poles, are
/// replaced by their power series.
inline constexpr double kKernelSeriesFallback = 1e-6;

struct KernelEval {
  Complex z;
  double xi;
  Complex value;
};

/// delta(t, c; x) = sum_n t^n / (c)_n  2F1(n+1, n+1; n+c; x), |x| < 1.
Complex delta_series(Complex t, Complex c, Complex x, const SeriesControl& ctrl = {});

/// exp(-t/x) Psi1(1, 1; c, 1; x, t/x), the closed form of delta_series.
/// DomainViolation at x = 0.
Complex delta_closed(Complex t, Complex c, Complex x, const SeriesControl& ctrl = {});

/// sum_n P_{n+1}^{(1/2)}(xi/sqrt2; pi/2) w^n / (n+1)!
///   = (exp(-i w) 1F1(1/2 - i xi/sqrt2; 1; 2 i w) - 1) / w.
Complex mp_shifted_egf(double xi, Complex w, const SeriesControl& ctrl = {});

/// Lambda(xi, z) = sum_{n < n_terms} z^n p_n(xi) / (n+1)!.
Complex lambda_series(double xi, Complex z, int n_terms);

/// Coordinate wavefunction of the coherent state |z>,
///   N(|z|^2)^{-1/2} sum_{n < n_terms} conj(z)^n p_n(xi) / (n+1)!.
Complex nlcs_wavefunction_series(double xi, Complex z, int n_terms);

/// Closed form of the wavefunction,
///   z exp(-i conj z) / (|z| sqrt(I0(2|z|) - 1) (sqrt2 xi - i))
///   * [F 1F1(1/2 - i xi/sqrt2; 1; 2i conj z) - Psi1(1, 1; c, 1; 1/2, i conj z)]
/// with c = (3 + i sqrt2 xi)/2 and F = 2F1(1, 1; c; 1/2).
Complex nlcs_wavefunction_closed(double xi, Complex z, const SeriesControl& ctrl = {});

/// Bargmann kernel B(z, xi) = Lambda(xi, z), closed form
///   exp(-i z) / (z (sqrt2 xi - i)) [F 1F1(1/2 - i xi/sqrt2; 1; 2iz) - Psi1(1, 1; c, 1; 1/2, iz)].
Complex bargmann_kernel(Complex z, double xi, const SeriesControl& ctrl = {});

KernelEval evaluate_kernel(Complex z, double xi, const SeriesControl& ctrl = {});

/// (n+1) d^n/dz^n Lambda(xi, z) at z = 0 for n = 0..n_max, from the closed
/// kernel sampled on the circle |z| = 1/2. Entry n approximates p_n(xi);
/// rounding is amplified by (n+1)! 2^n, so only n <= 6 is good to 1e-6.
std::vector<double> lambda_derivative_coefficients(double xi, int n_max,
                                                   const SeriesControl& ctrl = {});

/// Discrete Cauchy-Riemann defect
///   |(f(z+h) - f(z-h)) / 2h - (f(z+ih) - f(z-ih)) / 2ih|.
double cauchy_riemann_residual(const std::function<Complex(Complex)>& f, Complex z,
                               double h);

/// B[f](z) = int B(z, xi) f(xi) omega(xi) d xi on a fixed quadrature grid.
/// Node weights w_k omega(xi_k) and the per-node 2F1 constants are computed
/// once at construction.
class BargmannTransform {
 public:
  explicit BargmannTransform(QuadratureGrid grid, SeriesControl ctrl = {});

  /// Quadrature with the closed kernel.
  Complex operator()(const std::function<double(double)>& f, Complex z) const;

  /// a_n = <p_n, f>_omega / (n+1)!, n < n_terms, so B[f](z) = sum a_n z^n.
  std::vector<double> taylor_coefficients(const std::function<double(double)>& f,
                                          int n_terms) const;

  /// int |f|^2 omega on the grid.
  double weighted_norm_squared(const std::function<double(double)>& f) const;

  const QuadratureGrid& grid() const { return grid_; }

 private:
  QuadratureGrid grid_;
  SeriesControl ctrl_;
  std::vector<double> measure_;
  std::vector<Complex> hyp_;
};

Complex bargmann_transform(const std::function<double(double)>& f, Complex z,
                           const QuadratureGrid& grid, const SeriesControl& ctrl = {});

/// Density of the target-space norm.
///   consistent: 4 |z|^2 K0(2|z|) dA / (2 pi), under which B is an isometry.
///   as_printed: 4 |z|^4 K0(2|z|) dA, which weights p_n by 2 pi (n+2)^2.
enum class NormConvention { consistent, as_printed };

const char* to_string(NormConvention convention);

struct NormCheck {
  double residual = 0.0;
  double input_norm_sq = 0.0;
  double image_norm_sq = 0.0;
  NormConvention convention = NormConvention::consistent;
  bool zero_input = false;
};

/// Compares int |f|^2 omega dx with the polar-quadrature norm of B[f]. B[f]
/// is evaluated from its Taylor coefficients on angle_count equispaced angles
/// times the radial grid. f = 0 gives residual 0 with zero_input set.
NormCheck transform_norm_residual(const std::function<double(double)>& f,
                                  const QuadratureGrid& r_grid, int angle_count,
                                  const QuadratureGrid& x_grid,
                                  NormConvention convention = NormConvention::consistent,
                                  const SeriesControl& ctrl = {});

}  // namespace ampoly
