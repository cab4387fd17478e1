#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ampoly/polynomials.hpp"

using namespace ampoly;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double grid_sup(int n, double lo, double hi) {
  double sup = 0.0;
  for (int k = 0; k <= 200; ++k) sup = std::max(sup, std::abs(assoc_mp_eval(n, lo + (hi - lo) * k / 200.0)));
  return sup;
}

}  // namespace

TEST_CASE("first polynomials from their printed closed forms") {
  for (double x : {-3.5, -1.0, 0.0, 0.7, 2.2, 4.0}) {
    CHECK(assoc_mp_eval(0, x) == 1.0);
    CHECK(assoc_mp_eval(1, x) == doctest::Approx(x / kSqrt2).epsilon(1e-14));
    CHECK(assoc_mp_eval(2, x) == doctest::Approx(x * x / 3.0 - 2.0 / 3.0).epsilon(1e-13));
    CHECK(assoc_mp_eval(3, x) ==
          doctest::Approx(kSqrt2 / 12.0 * x * x * x - 13.0 / (12.0 * kSqrt2) * x).epsilon(1e-13));
    CHECK(assoc_mp_eval(4, x) ==
          doctest::Approx(x * x * x * x / 30.0 - 29.0 / 60.0 * x * x + 8.0 / 15.0).epsilon(1e-13));
  }
  CHECK(std::abs(assoc_mp_eval(4, 0.0) - 8.0 / 15.0) < 1e-15);
}

TEST_CASE("assoc_mp_sequence") {
  const auto at_zero = assoc_mp_sequence(4, 0.0);
  REQUIRE(at_zero.size() == 5);
  CHECK(at_zero[0] == 1.0);
  CHECK(at_zero[1] == 0.0);
  CHECK(std::abs(at_zero[2] + 2.0 / 3.0) < 1e-15);
  CHECK(at_zero[3] == 0.0);
  CHECK(std::abs(at_zero[4] - 8.0 / 15.0) < 1e-15);
  const auto at_one = assoc_mp_sequence(1, 1.0);
  CHECK(at_one[1] == doctest::Approx(1.0 / kSqrt2).epsilon(1e-15));
  const auto long_run = assoc_mp_sequence(40, 1.7);
  for (int n = 0; n <= 40; ++n) CHECK(long_run[n] == assoc_mp_eval(n, 1.7));
  CHECK_THROWS_AS(assoc_mp_sequence(-1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(assoc_mp_eval(-1, 0.0), std::invalid_argument);
}

TEST_CASE("parity") {
  for (int n = 0; n <= 50; ++n) {
    for (double x : {0.3, 1.1, 2.9, 4.4}) {
      CHECK(assoc_mp_eval(n, -x) == (n % 2 == 0 ? 1.0 : -1.0) * assoc_mp_eval(n, x));
    }
  }
}

TEST_CASE("monic q_n") {
  for (double x : {-2.0, 0.5, 3.0}) {
    CHECK(monic_q_eval(1, x) == x);
    CHECK(monic_q_eval(2, x) == doctest::Approx(x * x - 2.0).epsilon(1e-15));
  }
  for (int n = 0; n <= 30; ++n) {
    CHECK(monic_scale(n) == doctest::Approx(factorial(n + 1) / std::pow(2.0, 0.5 * n)).epsilon(1e-13));
    for (double x : {-2.3, 0.9, 3.1}) {
      const double q = monic_q_eval(n, x);
      CHECK(std::abs(q - monic_scale(n) * assoc_mp_eval(n, x)) <= 1e-12 * std::abs(q));
    }
  }
}

TEST_CASE("classical Meixner-Pollaczek") {
  for (double y : {-1.2, 0.0, 0.5, 2.0}) {
    CHECK(classical_mp_eval(0, y) == 1.0);
    CHECK(classical_mp_eval(1, y) == 2.0 * y);
    CHECK(classical_mp_eval(2, y) == doctest::Approx(2.0 * y * y - 0.5).epsilon(1e-14));
    // Taylor coefficients of exp(2y arctan t) / sqrt(1 + t^2)
    const auto coeffs = cauchy_taylor_coefficients(
        [y](Complex t) { return std::exp(2.0 * y * std::atan(t)) / std::sqrt(1.0 + t * t); }, 10, 0.5,
        64);
    const auto seq = classical_mp_sequence(10, y);
    for (int n = 0; n <= 10; ++n) {
      CHECK(std::abs(coeffs[n].real() - seq[n]) < 1e-11 * std::max(1.0, std::abs(seq[n])));
      CHECK(seq[n] == classical_mp_eval(n, y));
    }
  }
}

TEST_CASE("evaluate dispatch and parse_family") {
  CHECK(parse_family("assoc") == PolynomialFamily::assoc_mp);
  CHECK(parse_family("classical") == PolynomialFamily::classical_mp);
  CHECK(parse_family("monic") == PolynomialFamily::monic_q);
  CHECK_THROWS_AS(parse_family("hermite"), std::invalid_argument);
  CHECK(evaluate(PolynomialFamily::assoc_mp, 3, 1.2) == assoc_mp_eval(3, 1.2));
  CHECK(evaluate(PolynomialFamily::classical_mp, 3, 1.2) == classical_mp_eval(3, 1.2));
  CHECK(evaluate(PolynomialFamily::monic_q, 3, 1.2) == monic_q_eval(3, 1.2));
}

TEST_CASE("Jacobi truncation") {
  const auto q1 = jacobi_truncation(1);
  CHECK(q1(0, 0) == 0.0);
  const auto q2 = jacobi_truncation(2);
  CHECK(q2(0, 1) == doctest::Approx(kSqrt2).epsilon(1e-15));
  const auto q3 = jacobi_truncation(3);
  CHECK(q3(1, 2) == doctest::Approx(3.0 / kSqrt2).epsilon(1e-15));
  for (int r = 0; r < 3; ++r) {
    CHECK(q3(r, r) == 0.0);
    for (int c = 0; c < 3; ++c) CHECK(q3(r, c) == q3(c, r));
  }
  CHECK(q3(0, 2) == 0.0);
  CHECK_THROWS_AS(q3(3, 0), std::out_of_range);
  CHECK_THROWS_AS(jacobi_truncation(0), std::invalid_argument);
}

TEST_CASE("determinant route") {
  for (double x : {-1.0, 0.0, 2.5}) {
    CHECK(assoc_mp_via_det(2, x) == doctest::Approx(x * x / 3.0 - 2.0 / 3.0).epsilon(1e-14));
  }
  CHECK(std::abs(assoc_mp_via_det(2, kSqrt2)) < 1e-15);
  CHECK(std::abs(assoc_mp_via_det(2, -kSqrt2)) < 1e-15);
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int n = 1; n <= 20; ++n) {
    const double sup = grid_sup(n, -5.0, 5.0);
    for (int k = 0; k < 10; ++k) {
      const double x = u(rng);
      CHECK(std::abs(assoc_mp_via_det(n, x) - assoc_mp_eval(n, x)) < 1e-12 * sup);
    }
  }
  CHECK_THROWS_AS(assoc_mp_via_det(0, 1.0), std::invalid_argument);
}

TEST_CASE("explicit hypergeometric formula") {
  for (double x : {-4.0, -0.5, 0.0, 1.3, 5.0}) {
    CHECK(std::abs(assoc_mp_explicit(0, x) - 1.0) < 1e-12);
  }
  CHECK(std::abs(assoc_mp_explicit(2, 0.0) + 2.0 / 3.0) < 1e-12);
  for (int n = 0; n <= 15; ++n) {
    const double sup = grid_sup(n, -5.0, 5.0);
    for (int k = 0; k <= 20; ++k) {
      const double x = -5.0 + 0.5 * k;
      CHECK(std::abs(assoc_mp_explicit(n, x) - assoc_mp_eval(n, x)) < 1e-9 * sup);
      // the same routine in the classical variable y = x / sqrt2
      CHECK(std::abs(assoc_mp_explicit_in_y(n, x / kSqrt2) - assoc_mp_explicit_complex(n, x)) <
            1e-12 * sup);
    }
  }
}

TEST_CASE("values at zero") {
  CHECK(zero_value_closed_form(2) == doctest::Approx(-2.0 / 3.0).epsilon(1e-15));
  CHECK(zero_value_closed_form(4) == doctest::Approx(8.0 / 15.0).epsilon(1e-15));
  for (int n = 0; n <= 40; ++n) {
    if (n % 2 == 1) {
      CHECK(zero_value_closed_form(n) == 0.0);
      CHECK(assoc_mp_eval(n, 0.0) == 0.0);
      continue;
    }
    const int m = n / 2;
    const double oracle = (m % 2 == 0 ? 1.0 : -1.0) * std::ldexp(1.0, 2 * m) * factorial(m) *
                          factorial(m) / factorial(2 * m + 1);
    CHECK(std::abs(zero_value_closed_form(n) / oracle - 1.0) < 1e-13);
    CHECK(std::abs(assoc_mp_eval(n, 0.0) / oracle - 1.0) < 1e-12);
  }
}

TEST_CASE("Jacobi eigenvalues") {
  const auto one = jacobi_eigen_roots(1);
  REQUIRE(one.size() == 1);
  CHECK(std::abs(one[0]) < 1e-15);
  const auto two = jacobi_eigen_roots(2);
  CHECK(two[0] == doctest::Approx(-kSqrt2).epsilon(1e-14));
  CHECK(two[1] == doctest::Approx(kSqrt2).epsilon(1e-14));
  for (double r : jacobi_eigen_roots(5)) CHECK(std::abs(assoc_mp_eval(5, r)) < 1e-9);
  CHECK_THROWS_AS(jacobi_eigen_roots(0), std::invalid_argument);
  CHECK_THROWS_AS(jacobi_eigen_roots(201), std::invalid_argument);
}

TEST_CASE("roots of consecutive degrees interlace") {
  for (int n = 1; n <= 30; ++n) {
    const auto a = jacobi_eigen_roots(n);
    const auto b = jacobi_eigen_roots(n + 1);
    for (int k = 0; k < n; ++k) {
      CHECK(b[k] < a[k]);
      CHECK(a[k] < b[k + 1]);
    }
  }
}
