#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ampoly/measures_quadrature.hpp"
#include "ampoly/polynomials.hpp"

using namespace ampoly;

namespace {

constexpr double kPi = std::numbers::pi;

const QuadratureGrid& weight_grid() {
  static const QuadratureGrid grid = build_hermite_style_grid(kDefaultWeightNodes);
  return grid;
}

const QuadratureGrid& radial_grid() {
  static const QuadratureGrid grid = build_radial_grid();
  return grid;
}

// int_0^inf t^{mu-1} K0(a t) dt = 2^{mu-2} a^{-mu} Gamma(mu/2)^2
double mellin_k0(double mu, double a) {
  return std::pow(2.0, mu - 2.0) * std::pow(a, -mu) * std::pow(std::tgamma(0.5 * mu), 2);
}

}  // namespace

TEST_CASE("QuadratureGrid invariants") {
  CHECK_NOTHROW(QuadratureGrid({0.0, 1.0}, {0.5, 0.5}, 1.0));
  CHECK_THROWS_AS(QuadratureGrid({0.0, 1.0}, {0.5}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(QuadratureGrid({0.0, 1.0}, {0.5, -0.5}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(QuadratureGrid({1.0, 0.0}, {0.5, 0.5}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(QuadratureGrid({0.0, 1.0}, {0.5, 0.5}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_hermite_style_grid(15), std::invalid_argument);
  CHECK_THROWS_AS(build_radial_grid(1.0), std::invalid_argument);
}

TEST_CASE("Legendre panel grid") {
  const auto grid = build_hermite_style_grid(50, 3.0);
  CHECK(grid.size() == 60);
  CHECK(grid.domain_cut() == 3.0);
  CHECK(grid.integrate([](double) { return 1.0; }) == doctest::Approx(6.0).epsilon(1e-14));
  const auto& g = weight_grid();
  CHECK(g.size() == 1600);
  CHECK(g.nodes().front() > -kWeightCut);
  CHECK(g.nodes().back() < kWeightCut);
  const double gauss = g.integrate([](double x) { return std::exp(-x * x); });
  CHECK(std::abs(gauss - std::sqrt(kPi)) < 1e-13);
  const double half = g.integrate([](double x) { return x > 0.0 ? std::exp(-x * x) : 0.0; });
  CHECK(std::abs(half - std::sqrt(kPi) / 2.0) < 1e-13);
}

TEST_CASE("radial grid") {
  const auto& g = radial_grid();
  CHECK(g.nodes().front() > 0.0);
  CHECK(g.nodes().back() < kRadialCut);
  CHECK(g.integrate([](double) { return 1.0; }) == doctest::Approx(kRadialCut).epsilon(1e-13));
  // log singularity at the origin
  CHECK(std::abs(g.integrate([](double r) { return std::log(r); }) -
                 (kRadialCut * std::log(kRadialCut) - kRadialCut)) < 1e-9);
}

TEST_CASE("weight function values") {
  CHECK(std::abs(weight_omega(0.0) - 2.0 * std::numbers::sqrt2 / (kPi * kPi)) < 1e-12);
  CHECK(std::abs(weight_omega(0.0) - 0.28657958412537813) < 1e-11);
  for (double x : {0.3, 1.7, 4.0, 11.0, 30.0}) {
    CHECK(weight_omega(-x) == doctest::Approx(weight_omega(x)).epsilon(1e-12));
    CHECK(weight_omega(x) > 0.0);
  }
  CHECK(weight_omega(5.0) < weight_omega(1.0));
  const auto e = evaluate_weight(1.25);
  CHECK(e.x == 1.25);
  CHECK(e.omega == weight_omega(1.25));
}

TEST_CASE("total mass of the weight") {
  const auto& g = weight_grid();
  const double mass = g.integrate([](double x) { return weight_omega(x); });
  CHECK(std::abs(mass - 1.0) < 1e-8);
  // the bare 2/pi prefactor leaves mass 1/sqrt2
  const double bare = mass * (2.0 / kPi) / (2.0 * std::numbers::sqrt2 / kPi);
  CHECK(std::abs(bare - 1.0 / std::numbers::sqrt2) < 1e-8);
  const auto doubled = build_hermite_style_grid(2 * kDefaultWeightNodes);
  CHECK(std::abs(doubled.integrate([](double x) { return weight_omega(x); }) - mass) < 1e-12);
}

TEST_CASE("orthonormality of p_n") {
  const auto gram = orthonormality_matrix(10, weight_grid());
  REQUIRE(gram.rows() == 11);
  const Eigen::MatrixXd defect = gram - Eigen::MatrixXd::Identity(11, 11);
  CHECK(defect.cwiseAbs().maxCoeff() < 1e-7);
  for (int m = 0; m <= 10; ++m) {
    for (int n = 0; n <= 10; ++n) {
      if ((m + n) % 2 == 1) CHECK(std::abs(gram(m, n)) < 1e-14);
      CHECK(gram(m, n) == gram(n, m));
    }
  }
  const auto coarse = orthonormality_matrix(10, build_hermite_style_grid(800));
  CHECK((coarse - gram).cwiseAbs().maxCoeff() < 1e-7);
  CHECK_THROWS_AS(orthonormality_matrix(10, build_hermite_style_grid(380)), std::invalid_argument);
  CHECK_THROWS_AS(orthonormality_matrix(-1, weight_grid()), std::invalid_argument);
}

TEST_CASE("coherent-state normalisation") {
  CHECK(nlcs_normalization(0.0) == 1.0);
  CHECK(nlcs_normalization(1e-8) == doctest::Approx(1.0 + 1e-8 / 4.0).epsilon(1e-15));
  for (double u : {1e-3, 0.5, 2.0, 9.0, 40.0}) {
    double series = 0.0;
    double term = 1.0;
    for (int n = 0; n < 80; ++n) {
      series += term;
      term *= u / ((n + 2.0) * (n + 2.0));
    }
    CHECK(nlcs_normalization(u) == doctest::Approx(series).epsilon(1e-12));
  }
  CHECK_THROWS_AS(nlcs_normalization(-1.0), std::invalid_argument);
}

TEST_CASE("radial moments") {
  for (int n = 0; n <= 8; ++n) {
    const double oracle = mellin_k0(2.0 * n + 4.0, 2.0);
    CHECK(radial_moment_exact(n) == doctest::Approx(oracle).epsilon(1e-13));
    CHECK(std::abs(radial_moment(n, radial_grid()) / oracle - 1.0) < 1e-8);
    CHECK(radial_moment_residual(n, radial_grid()) < 1e-8);
  }
  CHECK(radial_moment_exact(0) == 0.25);
  CHECK(radial_moment_exact(2) == 9.0);
  CHECK_THROWS_AS(radial_moment_residual(9, radial_grid()), std::invalid_argument);
  CHECK_THROWS_AS(radial_moment(-1, radial_grid()), std::invalid_argument);
}

TEST_CASE("resolution of the identity") {
  for (int n = 0; n <= 8; ++n) {
    CHECK(std::abs(resolution_diagonal_ratio(n, radial_grid(), AreaMeasure::lebesgue_over_2pi) - 1.0) <
          1e-6);
    CHECK(std::abs(resolution_diagonal_ratio(n, radial_grid(), AreaMeasure::lebesgue) / (2.0 * kPi) -
                   1.0) < 1e-6);
  }
  CHECK(std::string(to_string(AreaMeasure::lebesgue)) != to_string(AreaMeasure::lebesgue_over_2pi));
  CHECK_THROWS_AS(resolution_diagonal_ratio(9, radial_grid(), AreaMeasure::lebesgue), std::invalid_argument);
}
