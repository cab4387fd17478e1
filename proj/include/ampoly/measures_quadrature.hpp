#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ampoly/special_functions.hpp"

namespace ampoly {

/// Nodes and positive weights of a composite rule on a truncated domain.
/// Nodes are strictly increasing.
class QuadratureGrid {
 public:
  QuadratureGrid(std::vector<double> nodes, std::vector<double> weights,
                 double domain_cut);

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  double domain_cut() const { return domain_cut_; }
  std::size_t size() const { return nodes_.size(); }

  /// Sum of w_k f(x_k) in node order.
  template <class F>
  auto integrate(F&& f) const -> decltype(f(0.0) * 1.0) {
    decltype(f(0.0) * 1.0) acc{};
    for (std::size_t k = 0; k < nodes_.size(); ++k) acc += weights_[k] * f(nodes_[k]);
    return acc;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
  double domain_cut_;
};

struct WeightEvaluation {
  double x;
  double omega;
};

/// Orthogonality density of the p_n on the real line,
///   omega(x) = (2 sqrt2 / pi) |Gamma(3/2 + i x/sqrt2)|^2
///              |2F1(1, 1; 3/2 + i x/sqrt2; 1/2)|^{-2},
/// normalised so that its total mass is 1.
double weight_omega(double x, const SeriesControl& ctrl = {});

WeightEvaluation evaluate_weight(double x, const SeriesControl& ctrl = {});

/// Truncation radius of the weight grid. The tail of p_10^2 omega past it is
/// below 1e-15; at 25 it is still 6e-6.
inline constexpr double kWeightCut = 40.0;

/// Node count of the default weight grid: 80 unit-width panels.
inline constexpr int kDefaultWeightNodes = 1600;

/// Radial cut for moment integrals; the n = 6 tail past it is 2e-12.
inline constexpr double kRadialCut = 30.0;

/// Composite 20-point Gauss-Legendre panels of equal width on [-cut, cut].
/// n_nodes (>= 16) is rounded up to a whole number of panels.
QuadratureGrid build_hermite_style_grid(int n_nodes, double cut = kWeightCut);

/// Grid on (0, cut] for radial K0 integrals: geometric panels
/// [2^{-k-1}, 2^{-k}] towards the origin, then uniform Legendre panels of
/// width 1/panels_per_unit on [1, cut].
QuadratureGrid build_radial_grid(double cut = kRadialCut, int panels_per_unit = 2);

/// Gram matrix G_mn = sum_k w_k p_m(x_k) p_n(x_k) omega(x_k), m, n <= n_max.
/// The grid must carry at least 40 n_max nodes.
Eigen::MatrixXd orthonormality_matrix(int n_max, const QuadratureGrid& grid,
                                      const SeriesControl& ctrl = {});

/// N(u) = sum_n u^n / ((n+1)!)^2 = (I0(2 sqrt u) - 1) / u for u = |z|^2.
double nlcs_normalization(double u);

/// int_0^cut rho^{2n+3} K0(2 rho) d rho on the grid.
double radial_moment(int n, const QuadratureGrid& radial_grid);

/// ((n+1)!)^2 / 4, the exact value of the untruncated radial moment.
double radial_moment_exact(int n);

/// Relative defect of radial_moment against radial_moment_exact; n <= 8.
double radial_moment_residual(int n, const QuadratureGrid& radial_grid);

/// Normalisation of the area element d mu in
///   d nu(z) = 4 K0(2|z|) (I0(2|z|) - 1) d mu(z).
/// With d mu = dA / (2 pi) the coherent states resolve the identity exactly;
/// with plain Lebesgue measure every diagonal element picks up 2 pi.
enum class AreaMeasure { lebesgue_over_2pi, lebesgue };

const char* to_string(AreaMeasure measure);

/// int N(|z|^2)^{-1} |z|^{2n} d nu(z) / x_n!, with the angular integral done
/// analytically. Equals 1 for lebesgue_over_2pi and 2 pi for lebesgue, up to
/// quadrature error.
double resolution_diagonal_ratio(int n, const QuadratureGrid& radial_grid,
                                 AreaMeasure measure);

}  // namespace ampoly
