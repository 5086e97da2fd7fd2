#include "pertbern/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pertbern/error.hpp"

namespace pertbern {

namespace {

void require_grid(const ModulusOptions& opts) {
  if (opts.grid_points < 64) throw DomainError("modulus grid needs at least 64 points");
  if (opts.ladder_steps < 1 || opts.steps_per_octave < 1) {
    throw DomainError("modulus step ladder must be nonempty");
  }
}

std::vector<double> step_ladder(double delta, const ModulusOptions& opts) {
  std::vector<double> hs;
  hs.reserve(opts.ladder_steps);
  for (int j = 0; j < opts.ladder_steps; ++j) {
    hs.push_back(delta * std::exp2(-static_cast<double>(j) / opts.steps_per_octave));
  }
  return hs;
}

// Uniform grid on [lo, hi] including both ends.
template <class Visit>
void for_each_point(double lo, double hi, int points, Visit&& visit) {
  if (hi < lo) return;
  for (int i = 0; i < points; ++i) {
    visit(lo + (hi - lo) * i / (points - 1));
  }
}

}  // namespace

ModulusEstimate omega1(const TestFunction& f, double delta, const ModulusOptions& opts,
                       int derivative_order) {
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw DomainError("omega1 step must lie in (0, 1], got " + std::to_string(delta));
  }
  require_grid(opts);
  ModulusEstimate est{1, delta, 0.0, opts.grid_points, true};
  if (opts.use_exact && derivative_order <= 4 && f.exact_omega1[derivative_order]) {
    est.value = f.exact_omega1[derivative_order](delta);
    est.lower_bound = false;
    return est;
  }
  const auto g = [&](double x) { return f.derivative(derivative_order, x); };
  double best = 0.0;
  for (double h : step_ladder(delta, opts)) {
    // Pairs (x, x+h) and (x-h, x) for every grid x; the grid contains 0 and 1
    // so both boundary pairs are always sampled.
    // The extra centres h and 1-h mirror the ones omega2 samples, so that
    // omega2 <= 2 omega1 holds between estimates on the same grid.
    const auto pairs = [&](double x) {
      const double gx = g(x);
      if (x + h <= 1.0) best = std::max(best, std::abs(g(x + h) - gx));
      if (x - h >= 0.0) best = std::max(best, std::abs(gx - g(x - h)));
    };
    for_each_point(0.0, 1.0, opts.grid_points, pairs);
    pairs(h);
    pairs(1.0 - h);
  }
  est.value = best;
  return est;
}

ModulusEstimate omega2(const TestFunction& f, double delta, const ModulusOptions& opts,
                       int derivative_order) {
  if (!(delta > 0.0 && delta <= 0.5)) {
    throw DomainError("omega2 step must lie in (0, 1/2], got " + std::to_string(delta));
  }
  require_grid(opts);
  ModulusEstimate est{2, delta, 0.0, opts.grid_points, true};
  if (opts.use_exact && derivative_order <= 4 && f.exact_omega2[derivative_order]) {
    est.value = f.exact_omega2[derivative_order](delta);
    est.lower_bound = false;
    return est;
  }
  const auto g = [&](double x) { return f.derivative(derivative_order, x); };
  double best = 0.0;
  for (double h : step_ladder(delta, opts)) {
    const auto second = [&](double x) {
      if (x - h < 0.0 || x + h > 1.0) return;
      best = std::max(best, std::abs(g(x - h) - 2.0 * g(x) + g(x + h)));
    };
    for_each_point(0.0, 1.0, opts.grid_points, second);
    // Centres at the extreme admissible positions.
    second(h);
    second(1.0 - h);
  }
  est.value = best;
  return est;
}

double sup_norm(const TestFunction& f, int derivative_order, int grid_points) {
  if (derivative_order < 0 || derivative_order > 4) {
    throw DomainError("sup_norm derivative order must lie in [0, 4]");
  }
  if (!f.has_derivative(derivative_order)) {
    throw DomainError(f.name + ": derivative of order " + std::to_string(derivative_order) +
                      " is not available");
  }
  if (grid_points < 3) grid_points = 3;
  const auto g = [&](double x) { return std::abs(f.derivative(derivative_order, x)); };
  double best = -1.0;
  int arg = 0;
  for (int i = 0; i < grid_points; ++i) {
    const double v = g(static_cast<double>(i) / (grid_points - 1));
    if (v > best) {
      best = v;
      arg = i;
    }
  }
  const double h = 1.0 / (grid_points - 1);
  double a = std::max(0.0, (arg - 1) * h);
  double b = std::min(1.0, (arg + 1) * h);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double gc = g(c), gd = g(d);
  for (int it = 0; it < 80 && b - a > 1e-15; ++it) {
    if (gc > gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - inv_phi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + inv_phi * (b - a);
      gd = g(d);
    }
    best = std::max({best, gc, gd});
  }
  return best;
}

}  // namespace pertbern
