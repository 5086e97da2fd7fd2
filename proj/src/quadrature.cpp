#include "pertbern/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "pertbern/error.hpp"

namespace pertbern {

namespace {

// Newton iteration on P_n from the Chebyshev-like initial guess, using the
// three-term Legendre recurrence. Nodes come out symmetric about 1/2.
QuadratureRule build_gauss_legendre(int n) {
  QuadratureRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  rule.exactness_degree = 2 * n - 1;
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) <= 1e-15) break;
    }
    {
      // One more derivative evaluation at the converged root for the weight.
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
    }
    // Map [-1, 1] -> [0, 1]: t = (1 -+ z) / 2, weight halves.
    const double w = 1.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = 0.5 * (1.0 - z);
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + z);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.5;
  return rule;
}

}  // namespace

const QuadratureRule& gauss_legendre(int points) {
  if (points < 1) throw ConfigError("Gauss-Legendre rule needs at least one node");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const QuadratureRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[points];
  if (!slot) slot = std::make_unique<const QuadratureRule>(build_gauss_legendre(points));
  return *slot;
}

QuadratureRule composite_gauss_legendre(int points, int cells) {
  if (cells < 1) throw ConfigError("composite rule needs at least one cell");
  const QuadratureRule& base = gauss_legendre(points);
  QuadratureRule rule;
  rule.exactness_degree = base.exactness_degree;
  rule.nodes.reserve(base.size() * cells);
  rule.weights.reserve(base.size() * cells);
  const double h = 1.0 / cells;
  for (int c = 0; c < cells; ++c) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      rule.nodes.push_back((c + base.nodes[i]) * h);
      rule.weights.push_back(base.weights[i] * h);
    }
  }
  return rule;
}

}  // namespace pertbern
