#include <doctest.h>

#include <cmath>

#include "pertbern/corpus.hpp"
#include "pertbern/error.hpp"
#include "pertbern/moduli.hpp"

using namespace pertbern;

namespace {

const std::vector<double> kLadder = {1.0, 0.5, 0.3, 0.25, 0.1, 0.05, 1.0 / 64, 1e-3};
// Below this step a 4096-point grid cannot place a centre on the kink of
// |x - 1/2|, so closeness is only asserted above it.
constexpr double kResolved = 0.01;

}  // namespace

TEST_CASE("reference values") {
  CHECK(omega1(monomial(1), 0.2).value == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(omega1(monomial(2), 0.1).value == doctest::Approx(0.19).epsilon(1e-14));
  CHECK(omega1(monomial(0), 0.5).value == 0.0);
  CHECK(omega2(monomial(1), 0.25).value == doctest::Approx(0.0));
  CHECK(omega2(monomial(2), 0.1).value == doctest::Approx(0.02).epsilon(1e-14));
  CHECK(sup_norm(monomial(2), 1) == doctest::Approx(2.0));
  CHECK(sup_norm(monomial(2), 2) == doctest::Approx(2.0));
  CHECK(sup_norm(corpus_function("sin_pi"), 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sup_norm(corpus_function("exp"), 3) == doctest::Approx(std::exp(1.0)));
}

TEST_CASE("step range is enforced") {
  const auto& f = monomial(2);
  CHECK_THROWS_AS(omega1(f, 0.0), DomainError);
  CHECK_THROWS_AS(omega1(f, 1.5), DomainError);
  CHECK_THROWS_AS(omega2(f, 0.6), DomainError);
  ModulusOptions small;
  small.grid_points = 10;
  CHECK_THROWS_AS(omega1(f, 0.1, small), DomainError);
}

TEST_CASE("exact closures bound the grid estimates from above and are close") {
  ModulusOptions grid;
  grid.grid_points = 4096;
  grid.use_exact = false;
  for (const auto& f : standard_corpus()) {
    for (int order = 0; order <= 4; ++order) {
      for (double d : kLadder) {
        CAPTURE(f.name);
        CAPTURE(order);
        CAPTURE(d);
        if (f.exact_omega1[order]) {
          const double exact = omega1(f, d, {}, order).value;
          const auto est = omega1(f, d, grid, order);
          CHECK(est.lower_bound);
          CHECK(est.value <= exact + 1e-12);
          if (d >= kResolved) CHECK(est.value >= 0.99 * exact - 1e-12);
        }
        if (f.exact_omega2[order] && d <= 0.5) {
          const double exact = omega2(f, d, {}, order).value;
          const double est = omega2(f, d, grid, order).value;
          CHECK(est <= exact + 1e-12);
          if (d >= kResolved) CHECK(est >= 0.99 * exact - 1e-12);
        }
      }
    }
  }
}

TEST_CASE("modulus invariants on the grid") {
  ModulusOptions grid;
  grid.use_exact = false;
  grid.grid_points = 512;
  for (const auto& f : standard_corpus()) {
    CAPTURE(f.name);
    const double sup = sup_norm(f, 0);
    double prev1 = 0.0, prev2 = 0.0;
    for (int k = 14; k >= 1; --k) {
      const double d = std::ldexp(1.0, -k);
      const double w1 = omega1(f, d, grid).value;
      const double w2 = omega2(f, d, grid).value;
      CHECK(w1 >= prev1 - 1e-15);
      CHECK(w2 >= prev2 - 1e-15);
      CHECK(w2 <= 2.0 * w1 + 1e-15);
      CHECK(2.0 * w1 <= 4.0 * sup + 1e-15);
      if (2.0 * d <= 1.0) CHECK(omega1(f, 2.0 * d, grid).value <= 2.0 * w1 + 1e-12);
      prev1 = w1;
      prev2 = w2;
    }
  }
}

TEST_CASE("identity is Lipschitz with constant one") {
  ModulusOptions grid;
  grid.use_exact = false;
  for (int k = 0; k <= 14; ++k) {
    const double d = std::ldexp(1.0, -k);
    CHECK(std::abs(omega1(monomial(1), d, grid).value / d - 1.0) <= 1e-12);
  }
}

TEST_CASE("x log x: second modulus against a dense brute-force oracle") {
  const auto& g = corpus_function("xlogx");
  const double delta = 0.1;
  // 10^6 x-points with steps on a fine ladder up to delta.
  double oracle = 0.0;
  const int points = 1000000;
  for (int j = 1; j <= 40; ++j) {
    const double h = delta * j / 40.0;
    for (int i = 0; i < points; ++i) {
      const double x = h + (1.0 - 2.0 * h) * i / (points - 1);
      oracle = std::max(oracle, std::abs(g(x - h) - 2.0 * g(x) + g(x + h)));
    }
  }
  // The supremum is reached at the left end, x = h = delta.
  CHECK(oracle == doctest::Approx(2.0 * delta * std::log(2.0)).epsilon(1e-9));
  const auto est = omega2(g, delta);
  CHECK(est.lower_bound);
  CHECK(est.value <= oracle + 1e-12);
  CHECK(est.value >= 0.9 * oracle);
}

TEST_CASE("x log x is in Lip*1 but not in Lip1") {
  const auto& g = corpus_function("xlogx");
  double w2_max = 0.0;
  double w2_eighth = 0.0;
  for (int k = 3; k <= 14; ++k) {
    const double d = std::ldexp(1.0, -k);
    const double r = omega2(g, d).value / d;
    w2_max = std::max(w2_max, r);
    if (k == 3) w2_eighth = r;
  }
  CHECK(w2_max <= 2.0 * w2_eighth);
  const double r_small = omega1(g, std::ldexp(1.0, -14)).value / std::ldexp(1.0, -14);
  const double r_large = omega1(g, 0.125).value / 0.125;
  CHECK(r_small >= 3.0 * r_large);
}
