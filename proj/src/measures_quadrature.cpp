#include "ampoly/measures_quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ampoly/polynomials.hpp"

namespace ampoly {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr unsigned kPanelOrder = 20;
// Geometric panels towards rho = 0 stop at 2^-kRadialLevels; the rest of
// the integrand there is below rho^3 |log rho| ~ 1e-36.
constexpr int kRadialLevels = 40;

using Legendre = boost::math::quadrature::gauss<double, kPanelOrder>;

void append_panel(double lo, double hi, std::vector<double>& nodes,
                  std::vector<double>& weights) {
  const auto& abscissa = Legendre::abscissa();
  const auto& w = Legendre::weights();
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  // abscissa holds the positive half of the symmetric rule, ascending
  for (std::size_t i = abscissa.size(); i-- > 0;) {
    nodes.push_back(mid - half * abscissa[i]);
    weights.push_back(half * w[i]);
  }
  for (std::size_t i = 0; i < abscissa.size(); ++i) {
    nodes.push_back(mid + half * abscissa[i]);
    weights.push_back(half * w[i]);
  }
}

}  // namespace

QuadratureGrid::QuadratureGrid(std::vector<double> nodes,
                               std::vector<double> weights, double domain_cut)
    : nodes_(std::move(nodes)), weights_(std::move(weights)), domain_cut_(domain_cut) {
  if (nodes_.size() != weights_.size() || nodes_.empty()) {
    throw std::invalid_argument("QuadratureGrid: nodes and weights must match");
  }
  if (!(domain_cut_ > 0.0)) {
    throw std::invalid_argument("QuadratureGrid: domain_cut must be > 0");
  }
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    if (!(weights_[k] > 0.0)) {
      throw std::invalid_argument("QuadratureGrid: weights must be positive");
    }
    if (k > 0 && !(nodes_[k] > nodes_[k - 1])) {
      throw std::invalid_argument("QuadratureGrid: nodes must increase strictly");
    }
  }
}

double weight_omega(double x, const SeriesControl& ctrl) {
  const double y = x / kSqrt2;
  const Complex hyp = gauss_2f1(1.0, 1.0, Complex(1.5, y), 0.5, ctrl);
  return 2.0 * kSqrt2 / kPi * gamma_abs_sq_3half(y) / std::norm(hyp);
}

WeightEvaluation evaluate_weight(double x, const SeriesControl& ctrl) {
  return {x, weight_omega(x, ctrl)};
}

QuadratureGrid build_hermite_style_grid(int n_nodes, double cut) {
  if (n_nodes < 16) {
    throw std::invalid_argument("build_hermite_style_grid: need at least 16 nodes");
  }
  if (!(cut > 0.0)) throw std::invalid_argument("build_hermite_style_grid: cut must be > 0");
  const int panels = (n_nodes + static_cast<int>(kPanelOrder) - 1) /
                     static_cast<int>(kPanelOrder);
  std::vector<double> nodes;
  std::vector<double> weights;
  nodes.reserve(static_cast<std::size_t>(panels) * kPanelOrder);
  weights.reserve(nodes.capacity());
  const double width = 2.0 * cut / panels;
  for (int p = 0; p < panels; ++p) {
    append_panel(-cut + p * width, -cut + (p + 1) * width, nodes, weights);
  }
  return QuadratureGrid(std::move(nodes), std::move(weights), cut);
}

QuadratureGrid build_radial_grid(double cut, int panels_per_unit) {
  if (!(cut > 1.0) || panels_per_unit < 1) {
    throw std::invalid_argument("build_radial_grid: need cut > 1 and panels_per_unit >= 1");
  }
  std::vector<double> nodes;
  std::vector<double> weights;
  append_panel(0.0, std::ldexp(1.0, -kRadialLevels), nodes, weights);
  for (int k = kRadialLevels - 1; k >= 0; --k) {
    append_panel(std::ldexp(1.0, -(k + 1)), std::ldexp(1.0, -k), nodes, weights);
  }
  const int panels = static_cast<int>(std::ceil((cut - 1.0) * panels_per_unit));
  const double width = (cut - 1.0) / panels;
  for (int p = 0; p < panels; ++p) {
    append_panel(1.0 + p * width, 1.0 + (p + 1) * width, nodes, weights);
  }
  return QuadratureGrid(std::move(nodes), std::move(weights), cut);
}

Eigen::MatrixXd orthonormality_matrix(int n_max, const QuadratureGrid& grid,
                                      const SeriesControl& ctrl) {
  if (n_max < 0) throw std::invalid_argument("orthonormality_matrix: negative n_max");
  if (grid.size() < static_cast<std::size_t>(40 * n_max)) {
    throw std::invalid_argument("orthonormality_matrix: grid needs >= 40 n_max nodes");
  }
  const int dim = n_max + 1;
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double x = grid.nodes()[k];
    const double w = grid.weights()[k] * weight_omega(x, ctrl);
    const std::vector<double> p = assoc_mp_sequence(n_max, x);
    for (int m = 0; m < dim; ++m) {
      for (int n = m; n < dim; ++n) gram(m, n) += w * p[m] * p[n];
    }
  }
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < m; ++n) gram(m, n) = gram(n, m);
  }
  return gram;
}

double nlcs_normalization(double u) {
  if (!(u >= 0.0)) throw std::invalid_argument("nlcs_normalization: requires u >= 0");
  if (u > 1e-6) return bessel_i0_minus_one(2.0 * std::sqrt(u)) / u;
  // 1 + u/4 + u^2/36 + u^3/576
  return 1.0 + u * (0.25 + u * (1.0 / 36.0 + u / 576.0));
}

double radial_moment(int n, const QuadratureGrid& radial_grid) {
  if (n < 0) throw std::invalid_argument("radial_moment: negative n");
  const int power = 2 * n + 3;
  return radial_grid.integrate(
      [power](double rho) { return std::pow(rho, power) * macdonald_k0(2.0 * rho); });
}

double radial_moment_exact(int n) {
  if (n < 0) throw std::invalid_argument("radial_moment_exact: negative n");
  double factorial = 1.0;
  for (int k = 2; k <= n + 1; ++k) factorial *= k;
  return factorial * factorial / 4.0;
}

double radial_moment_residual(int n, const QuadratureGrid& radial_grid) {
  if (n < 0 || n > 8) throw std::invalid_argument("radial_moment_residual: need 0 <= n <= 8");
  const double exact = radial_moment_exact(n);
  return std::abs(radial_moment(n, radial_grid) - exact) / exact;
}

const char* to_string(AreaMeasure measure) {
  switch (measure) {
    case AreaMeasure::lebesgue_over_2pi: return "dmu=dA/(2pi)";
    case AreaMeasure::lebesgue: return "dmu=dA";
  }
  return "unknown";
}

double resolution_diagonal_ratio(int n, const QuadratureGrid& radial_grid,
                                 AreaMeasure measure) {
  if (n < 0 || n > 8) {
    throw std::invalid_argument("resolution_diagonal_ratio: need 0 <= n <= 8");
  }
  // angular integral of d theta over [0, 2 pi) against d mu
  const double angular = measure == AreaMeasure::lebesgue ? 2.0 * kPi : 1.0;
  const double radial = radial_grid.integrate([n](double rho) {
    const double u = rho * rho;
    const double density = 4.0 * macdonald_k0(2.0 * rho) * bessel_i0_minus_one(2.0 * rho);
    return std::pow(u, n) / nlcs_normalization(u) * density * rho;
  });
  const double factorial_sq = 4.0 * radial_moment_exact(n);
  return angular * radial / factorial_sq;
}

}  // namespace ampoly
