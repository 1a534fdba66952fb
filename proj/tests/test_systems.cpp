#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "polarvi/dense.hpp"
#include "polarvi/integrators.hpp"
#include "polarvi/systems.hpp"

using namespace polarvi;

TEST_CASE("dipole energy against direct formula evaluation") {
  const DipoleParams params;

  // At the identity the two charge distances coincide and cancel, leaving
  // the gravity term m e3^T e3 = m.
  const double u_id = dipole_potential(RotMat::identity(3), params);
  const double d = std::sqrt(params.alpha * params.alpha + 0.25);
  const double expected_id =
      params.m + params.q * params.beta * (1.0 / d - 1.0 / d);
  CHECK(u_id == doctest::Approx(expected_id).epsilon(1e-15));

  // Kinetic term only.
  const SkewMat mu = hat({0.0, 0.0, -0.01});
  CHECK(dipole_energy(RotMat::identity(3), mu, params) ==
        doctest::Approx(params.m + 0.5 * 1e-4 / (params.m * params.alpha * params.alpha))
            .epsilon(1e-13));
  CHECK(dipole_energy(RotMat::identity(3), SkewMat(3), params) ==
        doctest::Approx(u_id).epsilon(1e-15));

  // Benchmark start: H = 0.005 + 1/sqrt(3.56) - 1/sqrt(2.96).
  const double h0 = dipole_energy(dipole_initial_attitude(),
                                  dipole_initial_momentum(), params);
  CHECK(h0 == doctest::Approx(0.005 + 1.0 / std::sqrt(3.56) - 1.0 / std::sqrt(2.96))
                  .epsilon(1e-14));
}

TEST_CASE("dipole initial data") {
  const RotMat g0 = dipole_initial_attitude();
  CHECK(g0(1, 0) == 0.0);
  CHECK(g0(1, 1) == 0.0);
  CHECK(g0(1, 2) == -1.0);
  const Mat gram = g0.mat() * g0.transpose().mat();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(gram(i, j) == (i == j ? 1.0 : 0.0));

  const Vec3 p = vee(dipole_initial_momentum());
  CHECK(p[0] == 0.0);
  CHECK(p[1] == 0.0);
  CHECK(p[2] == doctest::Approx(-0.01).epsilon(1e-15));
}

TEST_CASE("dipole configuration gradient matches finite differences") {
  std::mt19937 rng(109);
  const DipoleParams params;
  for (int trial = 0; trial < 50; ++trial) {
    const RotMat g = oracle::random_rotation(rng, 3);
    const SkewMat mu = oracle::random_skew(rng, 3, 0.2);
    const SkewMat grad = dipole_d_g(g, mu, params);
    // Random unit direction in sk(3).
    SkewMat dir = oracle::random_skew(rng, 3);
    dir *= 1.0 / dir.norm();
    const double fd = oracle::central_diff(
        [&](double t_val) {
          const RotMat gt = polar_project(g.mat() +
                                          t_val * (g.mat() * dir.to_mat()));
          return dipole_energy(gt, mu, params);
        },
        1e-5);
    CHECK(std::abs(skew_inner(grad, dir) - fd) <= 1e-6);
  }
}

TEST_CASE("dipole momentum derivative matches finite differences") {
  std::mt19937 rng(113);
  const DipoleParams params;
  const RotMat g = oracle::random_rotation(rng, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const SkewMat mu = oracle::random_skew(rng, 3, 0.3);
    SkewMat dir = oracle::random_skew(rng, 3);
    dir *= 1.0 / dir.norm();
    const SkewMat d = dipole_d_mu(g, mu, params);
    const double fd = oracle::central_diff(
        [&](double t_val) {
          return dipole_energy(g, mu + t_val * dir, params);
        },
        1e-5);
    CHECK(std::abs(skew_inner(d, dir) - fd) <= 1e-6);
  }
}

TEST_CASE("charge scaling acts linearly on the charge part of d_g") {
  std::mt19937 rng(127);
  const RotMat g = oracle::random_rotation(rng, 3);
  const SkewMat mu(3);
  DipoleParams base;
  DipoleParams gravity_only = base;
  gravity_only.q = 0.0;
  DipoleParams doubled = base;
  doubled.q = 2.0;

  const SkewMat charge_part = dipole_d_g(g, mu, base) - dipole_d_g(g, mu, gravity_only);
  const SkewMat charge_part2 =
      dipole_d_g(g, mu, doubled) - dipole_d_g(g, mu, gravity_only);
  CHECK((charge_part2 - 2.0 * charge_part).norm() < 1e-14);

  // Gravity-only gradient vanishes at the identity: e3 e3^T is symmetric.
  CHECK(dipole_d_g(RotMat::identity(3), mu, gravity_only).norm() == 0.0);
}

TEST_CASE("frame identity between right- and left-trivialized energies") {
  // H^R(g, p) with p treated as the right-trivialized momentum vector equals
  // H^L(g, hat(g^T p)).
  std::mt19937 rng(131);
  const DipoleParams params;
  const Mat jinv = inverse(params.inertia());
  for (int trial = 0; trial < 30; ++trial) {
    const RotMat g = oracle::random_rotation(rng, 3);
    const Vec3 p{oracle::uniform(rng, -1, 1), oracle::uniform(rng, -1, 1),
                 oracle::uniform(rng, -1, 1)};
    const Vec3 gjg = (g.mat() * jinv * g.transpose().mat()).apply3(p);
    const double right = 0.5 * dot(p, gjg) + dipole_potential(g, params);
    const double left = dipole_energy(g, legendre_convert(g, p), params);
    CHECK(std::abs(right - left) <= 1e-13 * (std::abs(right) + 1.0));
  }
}

TEST_CASE("free body isotropy") {
  DipoleParams params;
  params.q = 0.0;
  params.m = 0.0;
  std::mt19937 rng(137);
  for (int trial = 0; trial < 10; ++trial) {
    const RotMat g = oracle::random_rotation(rng, 3);
    CHECK(dipole_d_g(g, SkewMat(3), params).norm() == 0.0);
  }
}

TEST_CASE("pole singularity guard") {
  // Lengthen the stick until |y_minus| = |z| and rotate the charge exactly
  // onto the pole: an x-axis rotation by atan(alpha) sends (0, -alpha, -1)
  // to (0, 0, -1.5) when alpha^2 + 1 = 1.5^2.
  DipoleParams params;
  params.alpha = std::sqrt(1.25);
  const double beta = std::atan(params.alpha);
  Mat g(3);
  g(0, 0) = 1.0;
  g(1, 1) = std::cos(beta);
  g(1, 2) = -std::sin(beta);
  g(2, 1) = std::sin(beta);
  g(2, 2) = std::cos(beta);
  CHECK_THROWS_AS(dipole_potential(RotMat(g), params), PoleSingularity);
  // The benchmark configuration is nowhere near the guard.
  CHECK_NOTHROW(dipole_potential(dipole_initial_attitude(), DipoleParams{}));
}

TEST_CASE("reduced rigid body") {
  const Mat inertia = Mat::diag({2.0, 1.0, 0.5});
  const ReducedHamiltonian sys = rigid_body_reduced(inertia);
  CHECK(sys.energy(SkewMat(3)) == 0.0);
  CHECK(sys.d_mu(SkewMat(3)).norm() == 0.0);

  const ReducedHamiltonian iso = rigid_body_reduced(Mat::identity(3));
  std::mt19937 rng(139);
  const SkewMat mu = oracle::random_skew(rng, 3);
  CHECK((iso.d_mu(mu) - mu).norm() < 1e-15);

  for (int trial = 0; trial < 20; ++trial) {
    const SkewMat m = oracle::random_skew(rng, 3);
    SkewMat dir = oracle::random_skew(rng, 3);
    dir *= 1.0 / dir.norm();
    const double fd = oracle::central_diff(
        [&](double t_val) { return sys.energy(m + t_val * dir); }, 1e-4);
    CHECK(std::abs(skew_inner(sys.d_mu(m), dir) - fd) <= 1e-8);
  }
}
