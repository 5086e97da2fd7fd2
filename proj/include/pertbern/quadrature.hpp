#pragma once

#include <vector>

namespace pertbern {

/// A quadrature rule normalized to the unit interval: sum_i w_i g(t_i)
/// approximates the integral of g over [0, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int exactness_degree = -1;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  double integrate(F&& g) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * g(nodes[i]);
    return sum;
  }

  /// Integral of g over [a, b].
  template <class F>
  double integrate(F&& g, double a, double b) const {
    const double len = b - a;
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * g(a + len * nodes[i]);
    return sum * len;
  }
};

/// Gauss-Legendre rule with `points` nodes on [0, 1]; exact for degree 2*points-1.
/// Rules are built once per size and shared.
const QuadratureRule& gauss_legendre(int points);

/// `cells` equal subintervals of [0, 1], each carrying a `points`-node
/// Gauss-Legendre rule. Exactness is per cell, hence the same as the base rule.
QuadratureRule composite_gauss_legendre(int points, int cells);

/// Knobs for the integrals inside the Kantorovich, Durrmeyer and genuine
/// operators. `points == 0` selects the size automatically per basis degree.
struct QuadratureOptions {
  int points = 0;
  int cells = 1;
};

}  // namespace pertbern
