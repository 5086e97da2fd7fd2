#include "pertbern/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pertbern/error.hpp"

namespace pertbern {

std::string_view to_string(Smoothness s) {
  switch (s) {
    case Smoothness::C0: return "C0";
    case Smoothness::LipStar1: return "LipStar1";
    case Smoothness::Lip1: return "Lip1";
    case Smoothness::C1: return "C1";
    case Smoothness::C2: return "C2";
    case Smoothness::C3: return "C3";
    case Smoothness::C4: return "C4";
  }
  return "?";
}

int derivative_count(Smoothness s) {
  switch (s) {
    case Smoothness::C1: return 1;
    case Smoothness::C2: return 2;
    case Smoothness::C3: return 3;
    case Smoothness::C4: return 4;
    default: return 0;
  }
}

double TestFunction::derivative(int order, double x) const {
  if (!has_derivative(order)) {
    throw DomainError(name + ": derivative of order " + std::to_string(order) +
                      " is not available");
  }
  return derivatives[order](x);
}

bool TestFunction::is_smooth(int order) const {
  if (derivative_count(smoothness) < order) return false;
  for (int k = 0; k <= order; ++k) {
    if (!has_derivative(k)) return false;
  }
  return true;
}

namespace {

// Moduli of c * x^p on [0, 1], c >= 0. For p >= 1 the first difference is
// largest at the right end; for p >= 2 the second difference too, and both
// grow with the step.
double monomial_omega1(double c, int p, double delta) {
  if (p == 0) return 0.0;
  const double d = std::min(delta, 1.0);
  return c * (1.0 - std::pow(1.0 - d, p));
}

double monomial_omega2(double c, int p, double delta) {
  if (p <= 1) return 0.0;
  const double d = std::min(delta, 0.5);
  return c * (1.0 - 2.0 * std::pow(1.0 - d, p) + std::pow(1.0 - 2.0 * d, p));
}

double falling(int j, int i) {
  double r = 1.0;
  for (int t = 0; t < i; ++t) r *= j - t;
  return r;
}

TestFunction make_exp() {
  TestFunction f;
  f.name = "exp";
  f.smoothness = Smoothness::C4;
  const double e = std::numbers::e;
  for (int i = 0; i <= 4; ++i) {
    f.derivatives[i] = [](double x) { return std::exp(x); };
    f.exact_omega1[i] = [e](double d) { return e - std::exp(1.0 - std::min(d, 1.0)); };
    f.exact_omega2[i] = [e](double d) {
      d = std::min(d, 0.5);
      return e - 2.0 * std::exp(1.0 - d) + std::exp(1.0 - 2.0 * d);
    };
  }
  return f;
}

TestFunction make_sin() {
  using std::numbers::pi;
  TestFunction f;
  f.name = "sin_pi";
  f.smoothness = Smoothness::C4;
  for (int i = 0; i <= 4; ++i) {
    const double scale = std::pow(pi, i);
    // d^i/dx^i sin(pi x) = pi^i sin(pi x + i pi/2)
    f.derivatives[i] = [scale, i](double x) { return scale * std::sin(pi * x + i * pi / 2); };
    if (i % 2 == 0) {
      f.exact_omega1[i] = [scale](double d) { return scale * std::sin(pi * std::min(d, 0.5)); };
      f.exact_omega2[i] = [scale](double d) {
        return scale * 2.0 * (1.0 - std::cos(pi * std::min(d, 0.5)));
      };
    } else {
      f.exact_omega1[i] = [scale](double d) { return scale * 2.0 * std::sin(pi * std::min(d, 1.0) / 2); };
      // 2|cos(pi x)|(1 - cos(pi h)) with x in [h, 1-h]; peaks at h = 1/3.
      f.exact_omega2[i] = [scale](double d) {
        const double c = std::cos(pi * std::min(d, 1.0 / 3.0));
        return scale * 2.0 * c * (1.0 - c);
      };
    }
  }
  return f;
}

TestFunction make_abs_half() {
  TestFunction f;
  f.name = "abs_half";
  f.smoothness = Smoothness::Lip1;
  f.derivatives[0] = [](double x) { return std::abs(x - 0.5); };
  f.exact_omega1[0] = [](double d) { return std::min(d, 0.5); };
  f.exact_omega2[0] = [](double d) { return 2.0 * std::min(d, 0.5); };
  return f;
}

// Extended by continuity with g(0) = 0.
TestFunction make_xlogx() {
  TestFunction f;
  f.name = "xlogx";
  f.smoothness = Smoothness::LipStar1;
  f.derivatives[0] = [](double x) { return x > 0.0 ? x * std::log(x) : 0.0; };
  return f;
}

}  // namespace

TestFunction monomial(int j) {
  if (j < 0) throw DomainError("monomial degree must be nonnegative");
  TestFunction f;
  f.name = "e" + std::to_string(j);
  f.smoothness = Smoothness::C4;
  f.poly_degree = j;
  f.monomial_coefficients.assign(static_cast<std::size_t>(j) + 1, 0.0);
  f.monomial_coefficients[j] = 1.0;
  for (int i = 0; i <= 4; ++i) {
    const double c = i <= j ? falling(j, i) : 0.0;
    const int p = std::max(j - i, 0);
    f.derivatives[i] = [c, p](double x) { return c == 0.0 ? 0.0 : c * std::pow(x, p); };
    f.exact_omega1[i] = [c, p](double d) { return monomial_omega1(c, p, d); };
    f.exact_omega2[i] = [c, p](double d) { return monomial_omega2(c, p, d); };
  }
  return f;
}

const std::vector<TestFunction>& standard_corpus() {
  static const std::vector<TestFunction> corpus = [] {
    std::vector<TestFunction> v;
    for (int j = 0; j <= 4; ++j) v.push_back(monomial(j));
    v.push_back(make_exp());
    v.push_back(make_sin());
    v.push_back(make_abs_half());
    v.push_back(make_xlogx());
    return v;
  }();
  return corpus;
}

const TestFunction& corpus_function(std::string_view name) {
  for (const auto& f : standard_corpus()) {
    if (f.name == name) return f;
  }
  throw ConfigError("unknown corpus function '" + std::string(name) + "'");
}

}  // namespace pertbern
