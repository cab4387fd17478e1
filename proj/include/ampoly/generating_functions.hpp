#pragma once

#include <vector>

#include "ampoly/special_functions.hpp"

namespace ampoly {

/// A point (x, t) for the ordinary generating function G_x(t) = sum p_n(x) t^n.
/// Construction enforces |t| < 1 (DomainViolation otherwise).
class GFPoint {
 public:
  GFPoint(double x, double t);

  double x() const { return x_; }
  double t() const { return t_; }

 private:
  double x_;
  double t_;
};

/// Below this |t| the closed forms of G_x fall back to the power series; the
/// two 1/t poles of the closed form cancel there.
inline constexpr double kGfSeriesFallback = 1e-3;

/// Closed form of G_x(t):
///   2F1(1,1;(3+i sqrt2 x)/2;(1+it)/2) / (t (i - sqrt2 x))
///   + 2F1(1,1;(3+i sqrt2 x)/2;1/2) / (sqrt2 x - i)
///     * exp(sqrt2 x arctan t) / (t sqrt(1+t^2)).
/// Real part, with ResidualImaginary if the imaginary part exceeds
/// 1e-9 (1 + |G|).
double gf_closed(const GFPoint& p, const SeriesControl& ctrl = {});

/// The same closed form continued to complex t, |t| < 1 (principal branches).
Complex gf_closed_complex(double x, Complex t, const SeriesControl& ctrl = {});

/// The equivalent longer form that carries the 2F1(2,2;(5+i sqrt2 x)/2;.)
/// term and an explicit -1/(t (sqrt2 x - t)); t must avoid sqrt2 x.
double gf_closed_long_form(const GFPoint& p, const SeriesControl& ctrl = {});

/// sum_{n < n_terms} p_n(x) t^n.
double gf_series(double x, double t, int n_terms);

/// Exponential generating function of the monic q_n,
///   ((1+i sqrt2 x)(3+i sqrt2 x))^{-1} 2F1(2,2;(5+i sqrt2 x)/2; 1/2 + i t/(2 sqrt2))
///   + 2F1(1,1;(3+i sqrt2 x)/2;1/2) (4x - 2t) exp(sqrt2 x arctan(t/sqrt2))
///     / ((sqrt2 x - i)(t^2+2)^{3/2}),
/// for |t| <= 1.4.
double egf_closed(double x, double t, const SeriesControl& ctrl = {});

/// sum_{n < n_terms} q_n(x) t^n / n!.
double egf_series(double x, double t, int n_terms);

/// |G_x(t) - [ (t^2+1)/(sqrt2 x t - t^2) Gt_x(sqrt2 t) + 1/(t^2 - sqrt2 x t) ]|
/// with both sides from the closed forms. Requires 0 < |t| < 0.7; throws
/// PoleInput when |t (sqrt2 x - t)| < 1e-8.
double gf_relation_residual(double x, double t, const SeriesControl& ctrl = {});

/// Residual of (t^3 + t) G' + (2t^2 - sqrt2 x t + 1) G - 1 = 0 with G and G'
/// from the termwise differentiated truncated series; |t| <= 0.8.
double gf_ode_residual(double x, double t, int n_terms);

/// The same ODE residual with G from the closed form and G' from a Cauchy
/// integral of the closed form on the circle |s - t| = 0.04; |t| <= 0.9.
/// Covers the |t| range where the truncated series is not yet converged.
double gf_ode_residual_closed(double x, double t, const SeriesControl& ctrl = {});

/// |2F1(2,2;5/2;(1+it)/2) - 3/(t^2+1) [ t/sqrt(t^2+1) (i pi/2 - Log(t + sqrt(t^2+1))) + 1 ]|
/// for |t| < 1.
double corollary41_residual(double t, const SeriesControl& ctrl = {});

/// Elementary closed form of 2F1(2,2;5/2;xi) on 0 < xi < 1:
///   3 / (4 xi (1 - xi)) [1 - (1 - 2 xi) / sqrt(xi (1 - xi)) arcsin(sqrt xi)].
double remark41_closed_2f1(double xi);

/// g(t) = exp(2y arctan t) / sqrt(1 + t^2) = sum P_n^{(1/2)}(y; pi/2) t^n.
double classical_gf(double y, double t);

/// Log(t + sqrt(t^2+1)) / (t sqrt(t^2+1)), the value of G_0(t).
double gf_at_zero_argument(double t);

/// Taylor coefficients of t -> G_x(t) at 0, extracted numerically from the
/// closed form on a circle of radius 1/2. Entry n approximates p_n(x).
std::vector<double> gf_extracted_coefficients(double x, int n_max,
                                              const SeriesControl& ctrl = {});

}  // namespace ampoly
