#pragma once

#include "polarvi/errors.hpp"

namespace polarvi {

/// Termination settings shared by every fixed-point iteration in the library.
struct FixedPointConfig {
  double tol = 1e-15;
  int max_iter = 100;

  void validate() const {
    if (!(tol > 0.0)) throw ScenarioError("FixedPointConfig: tol must be positive");
    if (max_iter < 1) throw ScenarioError("FixedPointConfig: max_iter must be >= 1");
  }
};

}  // namespace polarvi
