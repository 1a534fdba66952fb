#pragma once

#include <vector>

#include "polarvi/butcher.hpp"
#include "polarvi/fixed_point.hpp"
#include "polarvi/lyapunov.hpp"
#include "polarvi/polar.hpp"

namespace polarvi {

/// Tangent map of the polar projection at a = u p: the skew w with
/// p w + w p + b^T u - u^T b = 0.
SkewMat dpol(const PolarFactors& factors, const Mat& b);

/// Adjoint of the tangent map: u * Lyap(p, w^T), a general square matrix.
Mat dpol_star(const PolarFactors& factors, const SkewMat& w);

/// Geometry of one integrator step shared by the stacked adjoint-chain
/// solves. Full mode (stage rotations U_i with base g_0) and reduced mode
/// (Theta_i^T with base f_0) produce identical data here: only the relative
/// rotations u_j^T u_l and the transported bases enter the chain equations,
/// and those agree between the two coordinatizations.
class StageGeometry {
 public:
  /// base is g_0^T in full mode and f_0 in reduced mode; factors[l] is the
  /// polar decomposition of the l-th stage argument A_l.
  StageGeometry(const RotMat& base, std::vector<PolarFactors> factors,
                std::vector<SkewMat> omegas, const ButcherTableau& tableau,
                double h);

  int stages() const { return s_; }
  int dim() const { return n_; }
  double step_size() const { return h_; }
  double a(int i, int j) const { return a_[static_cast<std::size_t>(i) * s_ + j]; }

  const RotMat& rel(int j, int l) const { return rel_[static_cast<std::size_t>(j) * s_ + l]; }
  const RotMat& base_transport(int l) const { return base_transport_[l]; }
  const SpdMat& p_factor(int l) const { return factors_[l].p; }
  const SkewMat& omega(int l) const { return omegas_[l]; }

 private:
  int s_ = 0;
  int n_ = 0;
  double h_ = 0.0;
  std::vector<double> a_;
  std::vector<PolarFactors> factors_;
  std::vector<SkewMat> omegas_;
  std::vector<RotMat> rel_;
  std::vector<RotMat> base_transport_;
};

/// Solves the stacked adjoint-chain system by fixed-point iteration:
///   s_j - asym(h sum_l a_lj rel(j,l) Lyap(p_l, s_l^T) omega_j^T) = rhs_j.
/// Convergence is the max over stages of the spectral norm of the update
/// difference falling below cfg.tol.
std::vector<SkewMat> chain_solve(const StageGeometry& geom,
                                 const std::vector<SkewMat>& rhs,
                                 const FixedPointConfig& cfg);

/// asym(sum_l a_lk rel(k,l) Lyap(p_l, s_l^T)) for chain solutions s.
SkewMat apply_psi_star(const StageGeometry& geom,
                       const std::vector<SkewMat>& sols, int k);

/// asym(sum_l base_transport(l) Lyap(p_l, s_l^T)) for chain solutions s.
SkewMat apply_varphi_star(const StageGeometry& geom,
                          const std::vector<SkewMat>& sols);

}  // namespace polarvi
