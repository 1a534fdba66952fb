#include "polarvi/systems.hpp"

#include <cmath>

#include "polarvi/dense.hpp"

namespace polarvi {

namespace {

void require_so3(const RotMat& g, const char* where) {
  if (g.dim() != 3) throw DimensionMismatch(std::string(where) + ": dimension is not 3");
}

double charge_distance(const RotMat& g, const Vec3& y, const Vec3& z) {
  const double d = norm(g.mat().apply3(y) - z);
  if (d < 1e-9)
    throw PoleSingularity("dipole: configuration within 1e-9 of a charge pole");
  return d;
}

}  // namespace

double dipole_potential(const RotMat& g, const DipoleParams& params) {
  require_so3(g, "dipole_potential");
  const Vec3 ge3 = g.mat().apply3({0.0, 0.0, 1.0});
  const double dp = charge_distance(g, params.y_plus(), params.z());
  const double dm = charge_distance(g, params.y_minus(), params.z());
  return params.m * ge3[2] + params.q * params.beta * (1.0 / dp - 1.0 / dm);
}

double dipole_energy(const RotMat& g, const SkewMat& mu, const DipoleParams& params) {
  const Vec3 p = vee(mu);
  const Mat jinv = inverse(params.inertia());
  return 0.5 * dot(p, jinv.apply3(p)) + dipole_potential(g, params);
}

SkewMat dipole_d_g(const RotMat& g, const SkewMat& /*mu*/, const DipoleParams& params) {
  require_so3(g, "dipole_d_g");
  // grad_g U as a dense 3x3 matrix.
  Mat grad(3);
  grad(2, 2) = params.m;  // e3 e3^T scaled by m
  const Vec3 charges[2] = {params.y_plus(), params.y_minus()};
  const double signs[2] = {1.0, -1.0};
  for (int k = 0; k < 2; ++k) {
    const Vec3 y = charges[k];
    const Vec3 r = g.mat().apply3(y) - params.z();
    const double d = charge_distance(g, y, params.z());
    const double coeff = -signs[k] * params.q * params.beta / (d * d * d);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) grad(i, j) += coeff * r[i] * y[j];
  }
  return asym(g.transpose() * grad);
}

SkewMat dipole_d_mu(const RotMat& /*g*/, const SkewMat& mu, const DipoleParams& params) {
  const Mat jinv = inverse(params.inertia());
  return hat(jinv.apply3(vee(mu)));
}

LeftTrivHamiltonian dipole_hamiltonian(const DipoleParams& params) {
  LeftTrivHamiltonian h;
  h.energy = [params](const RotMat& g, const SkewMat& mu) {
    return dipole_energy(g, mu, params);
  };
  h.d_g = [params](const RotMat& g, const SkewMat& mu) {
    return dipole_d_g(g, mu, params);
  };
  h.d_mu = [params](const RotMat& g, const SkewMat& mu) {
    return dipole_d_mu(g, mu, params);
  };
  return h;
}

RotMat dipole_initial_attitude() {
  Mat g(3, {1.0, 0.0, 0.0,  //
            0.0, 0.0, -1.0,  //
            0.0, 1.0, 0.0});
  return RotMat(g);
}

SkewMat dipole_initial_momentum(const DipoleParams& params) {
  const RotMat g0 = dipole_initial_attitude();
  // Right-trivialized start p(0) = g J g^T e2 pulled back by the Legendre
  // frame change p~ = g^T p, so p~(0) = J g^T e2.
  const Vec3 gte2 = g0.transpose().mat().apply3({0.0, 1.0, 0.0});
  return hat(params.inertia().apply3(gte2));
}

ReducedHamiltonian rigid_body_reduced(const Mat& inertia) {
  const Mat jinv = inverse(inertia);
  ReducedHamiltonian h;
  h.energy = [jinv](const SkewMat& mu) {
    const Vec3 p = vee(mu);
    return 0.5 * dot(p, jinv.apply3(p));
  };
  h.d_mu = [jinv](const SkewMat& mu) { return hat(jinv.apply3(vee(mu))); };
  return h;
}

LeftTrivHamiltonian rigid_body_full(const Mat& inertia) {
  const ReducedHamiltonian r = rigid_body_reduced(inertia);
  LeftTrivHamiltonian h;
  h.energy = [r](const RotMat&, const SkewMat& mu) { return r.energy(mu); };
  h.d_g = [](const RotMat& g, const SkewMat&) { return SkewMat(g.dim()); };
  h.d_mu = [r](const RotMat&, const SkewMat& mu) { return r.d_mu(mu); };
  return h;
}

}  // namespace polarvi
