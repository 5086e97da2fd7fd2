#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pertbern {

enum class Smoothness { C0, LipStar1, Lip1, C1, C2, C3, C4 };

std::string_view to_string(Smoothness s);

/// Number of continuous derivatives a smoothness class guarantees (capped at 4).
int derivative_count(Smoothness s);

using RealFn = std::function<double(double)>;

/// A function on [0, 1] with optional exact derivatives and exact moduli.
///
/// Index j of `derivatives` holds f^(j) (index 0 is f itself). Exact moduli
/// are stored per derivative order as well, so omega(f'', delta) can be exact
/// whenever the closed form is known.
struct TestFunction {
  std::string name;
  Smoothness smoothness = Smoothness::C0;
  std::array<RealFn, 5> derivatives;
  std::optional<int> poly_degree;
  /// Monomial coefficients c_0..c_d when poly_degree is set.
  std::vector<double> monomial_coefficients;
  std::array<std::function<double(double)>, 5> exact_omega1;
  std::array<std::function<double(double)>, 5> exact_omega2;

  double operator()(double x) const { return derivatives[0](x); }
  bool has_derivative(int order) const {
    return order >= 0 && order <= 4 && static_cast<bool>(derivatives[order]);
  }
  /// f^(order)(x); throws DomainError if that derivative is not declared.
  double derivative(int order, double x) const;
  /// True if f is C^order and the derivatives up to `order` are declared.
  bool is_smooth(int order) const;
};

/// e_j(x) = x^j with all derivatives and exact moduli.
TestFunction monomial(int j);

/// e0..e4, exp, sin(pi x), |x - 1/2|, x log x.
const std::vector<TestFunction>& standard_corpus();

/// Corpus member by name; throws ConfigError for unknown names.
const TestFunction& corpus_function(std::string_view name);

}  // namespace pertbern
