#include <doctest.h>

#include <cmath>

#include "pertbern/error.hpp"
#include "pertbern/quadrature.hpp"

using namespace pertbern;

TEST_CASE("Gauss-Legendre weights sum to one and integrate monomials exactly") {
  for (int points : {1, 2, 3, 5, 12, 40, 75}) {
    const QuadratureRule& rule = gauss_legendre(points);
    REQUIRE(rule.size() == static_cast<std::size_t>(points));
    CHECK(rule.exactness_degree == 2 * points - 1);
    double w = 0.0;
    for (double v : rule.weights) w += v;
    CHECK(std::abs(w - 1.0) <= 1e-14);
    for (int j = 0; j <= rule.exactness_degree; ++j) {
      const double got = rule.integrate([j](double t) { return std::pow(t, j); });
      const double want = 1.0 / (j + 1);
      CHECK(std::abs(got - want) <= 1e-13 * want);
    }
    for (std::size_t i = 0; i < rule.size(); ++i) {
      CHECK(rule.nodes[i] > 0.0);
      CHECK(rule.nodes[i] < 1.0);
      CHECK(rule.weights[i] > 0.0);
    }
  }
}

TEST_CASE("known 2-point nodes") {
  const QuadratureRule& rule = gauss_legendre(2);
  CHECK(rule.nodes[0] == doctest::Approx(0.5 - 0.5 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(rule.nodes[1] == doctest::Approx(0.5 + 0.5 / std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("rules are cached") {
  CHECK(&gauss_legendre(9) == &gauss_legendre(9));
}

TEST_CASE("composite rule") {
  const QuadratureRule rule = composite_gauss_legendre(4, 8);
  CHECK(rule.size() == 32);
  CHECK(rule.exactness_degree == 7);
  const double got = rule.integrate([](double t) { return std::exp(t); });
  CHECK(std::abs(got - (std::exp(1.0) - 1.0)) <= 1e-14);
  CHECK(std::abs(rule.integrate([](double t) { return t * t; }, 0.25, 0.75) - (0.421875 - 0.015625) / 3.0) <= 1e-15);
  CHECK_THROWS_AS(composite_gauss_legendre(4, 0), ConfigError);
  CHECK_THROWS_AS(gauss_legendre(0), ConfigError);
}
