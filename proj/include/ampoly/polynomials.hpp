#pragma once

#include <string_view>
#include <vector>

#include "ampoly/special_functions.hpp"

namespace ampoly {

/// Which polynomial sequence an evaluation refers to.
///  - assoc_mp:     p_n(x), first-associated Meixner-Pollaczek, orthonormal
///  - classical_mp: P_n^{(1/2)}(y; pi/2), classical Meixner-Pollaczek
///  - monic_q:      q_n(x) = c_n! p_n(x), monic renormalisation of p_n
enum class PolynomialFamily { assoc_mp, classical_mp, monic_q };

/// Parses "assoc", "classical" or "monic"; throws std::invalid_argument.
PolynomialFamily parse_family(std::string_view name);

/// Truncation Q_n of the Jacobi matrix of p_n: zero diagonal, symmetric,
/// off-diagonal entry k (between rows k-1 and k) equal to (k+1)/sqrt(2).
class TridiagonalMatrix {
 public:
  explicit TridiagonalMatrix(int dimension);

  int dimension() const { return dimension_; }
  /// Diagonal entries, all zero for Q_n.
  const std::vector<double>& diagonal() const { return diagonal_; }
  /// Entries (k-1, k) = (k, k-1) for k = 1..n-1, stored at index k-1.
  const std::vector<double>& off_diagonal() const { return off_diagonal_; }
  /// Dense access for small matrices and tests.
  double operator()(int row, int col) const;

 private:
  int dimension_;
  std::vector<double> diagonal_;
  std::vector<double> off_diagonal_;
};

/// p_n(x) by x p_n = ((n+2)/sqrt2) p_{n+1} + ((n+1)/sqrt2) p_{n-1},
/// seeded with p_{-1} = 0, p_0 = 1.
double assoc_mp_eval(int n, double x);

/// [p_0(x), ..., p_{n_max}(x)] from a single recurrence pass.
std::vector<double> assoc_mp_sequence(int n_max, double x);

/// Monic q_n(x): x q_n = q_{n+1} + ((n+1)^2 / 2) q_{n-1}.
double monic_q_eval(int n, double x);

/// c_n! = prod_{k=1..n} sqrt(x_k / 2) = (n+1)! / 2^{n/2}, the factor with
/// q_n = c_n! p_n.
double monic_scale(int n);

/// Classical P_n^{(1/2)}(y; pi/2): (n+1) P_{n+1} = 2y P_n - n P_{n-1}.
double classical_mp_eval(int n, double y);

/// [P_0(y), ..., P_{n_max}(y)] for the classical family.
std::vector<double> classical_mp_sequence(int n_max, double y);

/// Dispatch on family. For classical_mp the argument is y.
double evaluate(PolynomialFamily family, int n, double arg);

TridiagonalMatrix jacobi_truncation(int n);

/// p_n(x) = 2^{n/2} / (n+1)! det(x I_n - Q_n), with the determinant from the
/// two-term recurrence D_k = x D_{k-1} - e_{k-1}^2 D_{k-2}. Valid for
/// 1 <= n <= 160.
double assoc_mp_via_det(int n, double x);

/// The two-term hypergeometric representation
///   p_n(x) = i^n (2)_n 2F1(n+2, n+2; n + (5 + i sqrt2 x)/2; 1/2)
///              / (2^{n+2} ((1 + i sqrt2 x)/2)_{n+2})
///          + 2F1(1, 1; (3 + i sqrt2 x)/2; 1/2) / (sqrt2 x - i)
///              * P_{n+1}^{(1/2)}(x / sqrt2; pi/2).
/// Returns the real part; throws ResidualImaginary if the imaginary part
/// exceeds 1e-9 (1 + |result|).
double assoc_mp_explicit(int n, double x, const SeriesControl& ctrl = {});

/// Complex value of the same representation before the real projection.
Complex assoc_mp_explicit_complex(int n, double x, const SeriesControl& ctrl = {});

/// Same representation written in the classical variable y = x / sqrt2,
/// i.e. P_n^{(1/2)}(y; pi/2, 1) with every sqrt2 x replaced by 2y.
Complex assoc_mp_explicit_in_y(int n, double y, const SeriesControl& ctrl = {});

/// Closed form of p_n(0): (-1)^{n/2} 2^n ((n/2)!)^2 / (n+1)! for even n,
/// 0 for odd n.
double zero_value_closed_form(int n);

/// Eigenvalues of Q_n in ascending order (the zeros of p_n); 1 <= n <= 200.
std::vector<double> jacobi_eigen_roots(int n);

}  // namespace ampoly
