#pragma once

#include <functional>

#include "polarvi/polar.hpp"
#include "polarvi/skew.hpp"

namespace polarvi {

/// Left-trivialized Hamiltonian on T*SO(n): energy plus its two partial
/// derivatives. d_g is the left-trivialized configuration derivative
/// asym(g^{-1} grad_g H), d_mu the momentum derivative; both live in sk(n)
/// under the Riesz identification.
struct LeftTrivHamiltonian {
  std::function<double(const RotMat&, const SkewMat&)> energy;
  std::function<SkewMat(const RotMat&, const SkewMat&)> d_g;
  std::function<SkewMat(const RotMat&, const SkewMat&)> d_mu;
};

/// Reduced Hamiltonian on sk(n)* for group-invariant systems.
struct ReducedHamiltonian {
  std::function<double(const SkewMat&)> energy;
  std::function<SkewMat(const SkewMat&)> d_mu;
};

/// Dipole-on-a-stick constants. The body carries charges +-q at y_plus,
/// y_minus feeling a fixed charge at z, plus gravity along e3; the inertia
/// is m diag(1+alpha^2, 1, alpha^2).
struct DipoleParams {
  double m = 1.0;
  double alpha = 0.1;
  double q = 1.0;
  double beta = 1.0;

  Vec3 y_plus() const { return {0.0, alpha, -1.0}; }
  Vec3 y_minus() const { return {0.0, -alpha, -1.0}; }
  Vec3 z() const { return {0.0, 0.0, -1.5}; }
  Mat inertia() const {
    return Mat::diag({m * (1.0 + alpha * alpha), m, m * alpha * alpha});
  }
};

/// Potential energy U(g) of the dipole system.
double dipole_potential(const RotMat& g, const DipoleParams& params);

/// Left-trivialized energy: kinetic vee(mu)^T J^{-1} vee(mu) / 2 plus U(g).
double dipole_energy(const RotMat& g, const SkewMat& mu, const DipoleParams& params);

/// asym(g^T grad_g U); independent of mu. The gradient is analytic:
/// grad_g (e3^T g e3) = e3 e3^T and grad_g ||g y - z||^{-1} =
/// -(g y - z) y^T / ||g y - z||^3.
SkewMat dipole_d_g(const RotMat& g, const SkewMat& mu, const DipoleParams& params);

SkewMat dipole_d_mu(const RotMat& g, const SkewMat& mu, const DipoleParams& params);

LeftTrivHamiltonian dipole_hamiltonian(const DipoleParams& params = {});

/// Benchmark initial data: the fixed starting attitude and the
/// left-trivialized momentum hat(J g(0)^T e2).
RotMat dipole_initial_attitude();
SkewMat dipole_initial_momentum(const DipoleParams& params = {});

/// Free rigid body as a reduced system: energy(mu) = vee(mu)^T J^{-1} vee(mu)/2.
ReducedHamiltonian rigid_body_reduced(const Mat& inertia);

/// The same body lifted to T*SO(3) (d_g vanishes identically).
LeftTrivHamiltonian rigid_body_full(const Mat& inertia);

}  // namespace polarvi
