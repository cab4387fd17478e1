#include "ampoly/polynomials.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ampoly {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr Complex kI{0.0, 1.0};

void require_degree(int n, const char* where) {
  if (n < 0) throw std::invalid_argument(std::string(where) + ": negative degree");
}

Complex i_power(int n) {
  switch (n % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// Shared body of the hypergeometric representation; `s` is sqrt2 x (equal to
// 2y in the classical variable) and `y` the argument of P_{n+1}^{(1/2)}.
Complex explicit_representation(int n, double s, double y,
                                const SeriesControl& ctrl) {
  const Complex shift = (1.0 + kI * s) / 2.0;
  const Complex leading =
      i_power(n) * pochhammer(2.0, n) *
      gauss_2f1(n + 2.0, n + 2.0, static_cast<double>(n) + (5.0 + kI * s) / 2.0,
                0.5, ctrl) /
      (std::ldexp(1.0, n + 2) * pochhammer(shift, n + 2));
  const Complex coupling =
      gauss_2f1(1.0, 1.0, (3.0 + kI * s) / 2.0, 0.5, ctrl) / (s - kI);
  return leading + coupling * classical_mp_eval(n + 1, y);
}

}  // namespace

PolynomialFamily parse_family(std::string_view name) {
  if (name == "assoc" || name == "assoc_mp") return PolynomialFamily::assoc_mp;
  if (name == "classical" || name == "classical_mp") {
    return PolynomialFamily::classical_mp;
  }
  if (name == "monic" || name == "monic_q") return PolynomialFamily::monic_q;
  throw std::invalid_argument("unknown polynomial family '" + std::string(name) + "'");
}

TridiagonalMatrix::TridiagonalMatrix(int dimension)
    : dimension_(dimension),
      diagonal_(static_cast<std::size_t>(std::max(dimension, 0)), 0.0) {
  if (dimension < 1) {
    throw std::invalid_argument("TridiagonalMatrix: dimension must be >= 1");
  }
  off_diagonal_.reserve(static_cast<std::size_t>(dimension) - 1);
  for (int k = 1; k < dimension; ++k) {
    off_diagonal_.push_back((k + 1) / kSqrt2);
  }
}

double TridiagonalMatrix::operator()(int row, int col) const {
  if (row < 0 || col < 0 || row >= dimension_ || col >= dimension_) {
    throw std::out_of_range("TridiagonalMatrix: index out of range");
  }
  if (row == col) return diagonal_[row];
  if (std::abs(row - col) == 1) return off_diagonal_[std::min(row, col)];
  return 0.0;
}

std::vector<double> assoc_mp_sequence(int n_max, double x) {
  require_degree(n_max, "assoc_mp_sequence");
  std::vector<double> p(static_cast<std::size_t>(n_max) + 1);
  p[0] = 1.0;
  double previous = 0.0;
  for (int n = 0; n < n_max; ++n) {
    p[n + 1] = (x * p[n] - (n + 1) / kSqrt2 * previous) * kSqrt2 / (n + 2);
    previous = p[n];
  }
  return p;
}

double assoc_mp_eval(int n, double x) {
  require_degree(n, "assoc_mp_eval");
  double previous = 0.0;
  double current = 1.0;
  for (int k = 0; k < n; ++k) {
    const double next = (x * current - (k + 1) / kSqrt2 * previous) * kSqrt2 / (k + 2);
    previous = current;
    current = next;
  }
  return current;
}

double monic_q_eval(int n, double x) {
  require_degree(n, "monic_q_eval");
  double previous = 0.0;
  double current = 1.0;
  for (int k = 0; k < n; ++k) {
    const double next = x * current - 0.5 * (k + 1.0) * (k + 1.0) * previous;
    previous = current;
    current = next;
  }
  return current;
}

double monic_scale(int n) {
  require_degree(n, "monic_scale");
  double scale = 1.0;
  for (int k = 1; k <= n; ++k) scale *= (k + 1) / kSqrt2;
  return scale;
}

std::vector<double> classical_mp_sequence(int n_max, double y) {
  require_degree(n_max, "classical_mp_sequence");
  std::vector<double> p(static_cast<std::size_t>(n_max) + 1);
  p[0] = 1.0;
  if (n_max >= 1) p[1] = 2.0 * y;
  for (int n = 1; n < n_max; ++n) {
    p[n + 1] = (2.0 * y * p[n] - n * p[n - 1]) / (n + 1);
  }
  return p;
}

double classical_mp_eval(int n, double y) {
  require_degree(n, "classical_mp_eval");
  if (n == 0) return 1.0;
  double previous = 1.0;
  double current = 2.0 * y;
  for (int k = 1; k < n; ++k) {
    const double next = (2.0 * y * current - k * previous) / (k + 1);
    previous = current;
    current = next;
  }
  return current;
}

double evaluate(PolynomialFamily family, int n, double arg) {
  switch (family) {
    case PolynomialFamily::assoc_mp: return assoc_mp_eval(n, arg);
    case PolynomialFamily::classical_mp: return classical_mp_eval(n, arg);
    case PolynomialFamily::monic_q: return monic_q_eval(n, arg);
  }
  throw std::invalid_argument("evaluate: unknown family");
}

TridiagonalMatrix jacobi_truncation(int n) { return TridiagonalMatrix(n); }

double assoc_mp_via_det(int n, double x) {
  if (n < 1 || n > 160) {
    throw std::invalid_argument("assoc_mp_via_det: need 1 <= n <= 160");
  }
  const TridiagonalMatrix q = jacobi_truncation(n);
  const auto& e = q.off_diagonal();
  // leading principal minors of x I - Q_n
  double d_prev = 1.0;
  double d = x - q.diagonal()[0];
  for (int k = 1; k < n; ++k) {
    const double next = (x - q.diagonal()[k]) * d - e[k - 1] * e[k - 1] * d_prev;
    d_prev = d;
    d = next;
  }
  double scale = std::pow(2.0, 0.5 * n);
  for (int k = 2; k <= n + 1; ++k) scale /= k;
  return scale * d;
}

Complex assoc_mp_explicit_complex(int n, double x, const SeriesControl& ctrl) {
  require_degree(n, "assoc_mp_explicit");
  return explicit_representation(n, kSqrt2 * x, x / kSqrt2, ctrl);
}

Complex assoc_mp_explicit_in_y(int n, double y, const SeriesControl& ctrl) {
  require_degree(n, "assoc_mp_explicit_in_y");
  return explicit_representation(n, 2.0 * y, y, ctrl);
}

double assoc_mp_explicit(int n, double x, const SeriesControl& ctrl) {
  const Complex value = assoc_mp_explicit_complex(n, x, ctrl);
  if (std::abs(value.imag()) >= 1e-9 * (1.0 + std::abs(value.real()))) {
    throw ResidualImaginary("assoc_mp_explicit: imaginary part " +
                            std::to_string(value.imag()) + " at n = " +
                            std::to_string(n));
  }
  return value.real();
}

double zero_value_closed_form(int n) {
  require_degree(n, "zero_value_closed_form");
  if (n % 2 == 1) return 0.0;
  const int half = n / 2;
  // (-1)^m 2^{2m} (m!)^2 / (2m+1)!  =  (-1)^m prod_{k=1..m} 4k^2 / ((2k)(2k+1))
  double value = 1.0;
  for (int k = 1; k <= half; ++k) value *= 2.0 * k / (2.0 * k + 1.0);
  return half % 2 == 0 ? value : -value;
}

std::vector<double> jacobi_eigen_roots(int n) {
  if (n < 1 || n > 200) {
    throw std::invalid_argument("jacobi_eigen_roots: need 1 <= n <= 200");
  }
  const TridiagonalMatrix q = jacobi_truncation(n);
  Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(q.diagonal().data(), n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  for (int k = 0; k + 1 < n; ++k) sub[k] = q.off_diagonal()[k];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("jacobi_eigen_roots: tridiagonal QL did not converge");
  }
  std::vector<double> roots(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + n);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace ampoly
