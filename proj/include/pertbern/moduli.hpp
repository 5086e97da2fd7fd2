#pragma once

#include "pertbern/corpus.hpp"

namespace pertbern {

/// Value of omega_1 or omega_2 at one step. Grid estimates only sample the
/// supremum and are therefore lower bounds; `lower_bound` is false only when
/// the value came from an exact closed form.
struct ModulusEstimate {
  int order = 1;
  double delta = 0.0;
  double value = 0.0;
  int grid_points = 0;
  bool lower_bound = true;
};

struct ModulusOptions {
  int grid_points = 2048;
  /// Steps h = delta * 2^(-j / steps_per_octave), j = 0 .. ladder_steps-1.
  int ladder_steps = 64;
  int steps_per_octave = 8;
  /// Ignore exact closures and always sample (used to audit the closures).
  bool use_exact = true;
};

/// First modulus of f^(derivative_order), delta in (0, 1].
ModulusEstimate omega1(const TestFunction& f, double delta, const ModulusOptions& opts = {},
                       int derivative_order = 0);

/// Second modulus of f^(derivative_order), delta in (0, 1/2].
ModulusEstimate omega2(const TestFunction& f, double delta, const ModulusOptions& opts = {},
                       int derivative_order = 0);

/// max |f^(order)| on [0, 1]: dense grid, then golden-section refinement
/// around the best grid point.
double sup_norm(const TestFunction& f, int derivative_order, int grid_points = 4096);

}  // namespace pertbern
