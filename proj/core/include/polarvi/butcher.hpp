#pragma once

#include <functional>
#include <string>
#include <vector>

#include "polarvi/fixed_point.hpp"

namespace polarvi {

/// Runge-Kutta coefficients. Validated on construction: sum b = 1 and
/// c_i = sum_j a_ij, both to 1e-15.
struct ButcherTableau {
  int s = 0;
  std::vector<double> a;  // row-major s x s
  std::vector<double> b;
  std::vector<double> c;
  std::string name;

  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * s + j]; }
  void validate() const;
};

/// The four built-in schemes: gl1 (midpoint, order 2), rk3 (order 3),
/// gl2 (two-stage Gauss-Legendre, order 4), gl3 (three-stage, order 6).
/// Surd coefficients are computed from run-time square roots.
ButcherTableau builtin_tableau(const std::string& name);

/// Conjugate coefficients a~_ij = b_j (1 - a_ji / b_i) making the pair
/// (a, a~) a symplectic partitioned Runge-Kutta scheme with shared weights.
ButcherTableau sprk_partner(const ButcherTableau& t);

/// Scenario-file form of a tableau: comma-separated decimal strings for the
/// row-major a matrix, the weights b, and the nodes c.
ButcherTableau tableau_from_strings(const std::string& a_csv,
                                    const std::string& b_csv,
                                    const std::string& c_csv);
void tableau_to_strings(const ButcherTableau& t, std::string& a_csv,
                        std::string& b_csv, std::string& c_csv);

/// Linear-space mechanical system for the partitioned oracle below, given as
/// dL/dq and the inverse Legendre map (q, p) -> qdot.
struct SprkSystem {
  std::function<std::vector<double>(const std::vector<double>& q,
                                    const std::vector<double>& qdot)>
      dL_dq;
  std::function<std::vector<double>(const std::vector<double>& q,
                                    const std::vector<double>& p)>
      velocity;
};

/// One step of the symplectic partitioned Runge-Kutta method on a linear
/// space, solved by fixed-point iteration on the stage derivatives. This is
/// a validation oracle for the tableaux and the fixed-point engine, not part
/// of the rotation-group pipeline.
std::pair<std::vector<double>, std::vector<double>> sprk_step(
    const ButcherTableau& t, const SprkSystem& sys,
    const std::vector<double>& q0, const std::vector<double>& p0, double h,
    const FixedPointConfig& cfg = {});

}  // namespace polarvi
