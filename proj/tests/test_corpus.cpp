#include <doctest.h>

#include <cmath>

#include "pertbern/corpus.hpp"
#include "pertbern/error.hpp"

using namespace pertbern;

namespace {

double central_difference(const TestFunction& f, int order, double x, double h) {
  const auto g = [&](double t) { return f.derivative(order - 1, t); };
  return (g(x + h) - g(x - h)) / (2.0 * h);
}

}  // namespace

TEST_CASE("corpus membership") {
  const auto& e2 = corpus_function("e2");
  CHECK(e2.derivative(2, 0.3) == 2.0);
  CHECK(e2.smoothness == Smoothness::C4);
  CHECK(corpus_function("xlogx").smoothness == Smoothness::LipStar1);
  CHECK(corpus_function("abs_half").exact_omega1[0](0.3) == doctest::Approx(0.3));
  CHECK_THROWS_AS(corpus_function("nope"), ConfigError);
  CHECK(corpus_function("xlogx")(0.0) == 0.0);
  CHECK_THROWS_AS(corpus_function("abs_half").derivative(1, 0.2), DomainError);
}

TEST_CASE("declared derivatives match finite differences") {
  for (const auto& f : standard_corpus()) {
    CAPTURE(f.name);
    for (int k = 1; k <= derivative_count(f.smoothness); ++k) {
      if (!f.has_derivative(k)) continue;
      const double h = k <= 2 ? 1e-4 : 1e-3;
      const double tol = k <= 2 ? 1e-5 : 1e-3;
      for (double x : {0.1, 0.27, 0.5, 0.63, 0.9}) {
        const double d = f.derivative(k, x);
        CHECK(std::abs(d - central_difference(f, k, x, h)) <= tol * (1.0 + std::abs(d)));
      }
    }
  }
}

TEST_CASE("polynomial members agree with their monomial expansion") {
  for (const auto& f : standard_corpus()) {
    if (!f.poly_degree) continue;
    CAPTURE(f.name);
    REQUIRE(f.monomial_coefficients.size() == static_cast<std::size_t>(*f.poly_degree) + 1);
    for (int i = 0; i <= 50; ++i) {
      const double x = i / 50.0;
      double p = 0.0;
      for (std::size_t j = f.monomial_coefficients.size(); j-- > 0;) p = p * x + f.monomial_coefficients[j];
      CHECK(std::abs(p - f(x)) <= 1e-13);
    }
  }
}

TEST_CASE("smoothness classes") {
  CHECK(derivative_count(Smoothness::C0) == 0);
  CHECK(derivative_count(Smoothness::Lip1) == 0);
  CHECK(derivative_count(Smoothness::C2) == 2);
  CHECK(derivative_count(Smoothness::C4) == 4);
  CHECK(corpus_function("exp").is_smooth(4));
  CHECK_FALSE(corpus_function("abs_half").is_smooth(1));
  CHECK(monomial(3).derivative(3, 0.7) == doctest::Approx(6.0));
  CHECK(monomial(3).derivative(4, 0.7) == 0.0);
}
