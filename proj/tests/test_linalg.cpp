#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "polarvi/dense.hpp"
#include "polarvi/lyapunov.hpp"
#include "polarvi/polar.hpp"
#include "polarvi/skew.hpp"

using namespace polarvi;

TEST_CASE("asym basics") {
  CHECK(asym(Mat::identity(3)).norm() == 0.0);

  std::mt19937 rng(11);
  const Mat s = symmetrize(oracle::random_mat(rng, 4));
  CHECK(asym(s).norm() == 0.0);

  Mat a(2, {0.0, 1.0, 0.0, 0.0});
  const SkewMat x = asym(a);
  CHECK(x(0, 1) == 1.0);
  CHECK(x(1, 0) == -1.0);
}

TEST_CASE("skew_inner definition and property (c)") {
  std::mt19937 rng(13);
  SkewMat w = oracle::random_skew(rng, 4);
  double direct = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) direct += w(i, j) * w(i, j);
  CHECK(skew_inner(w, w) == doctest::Approx(direct).epsilon(1e-15));

  CHECK(skew_inner(hat({1.0, 0.0, 0.0}), hat({0.0, 1.0, 0.0})) == 0.0);

  // <w, asym(a)> = tr(w a^T) on random inputs.
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 5;
    const SkewMat omega = oracle::random_skew(rng, n);
    const Mat a = oracle::random_mat(rng, n);
    const double lhs = skew_inner(omega, asym(a));
    const double rhs = oracle::trace_prod_t(omega.to_mat(), a);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
  }

  CHECK_THROWS_AS(skew_inner(SkewMat(2), SkewMat(3)), DimensionMismatch);
}

TEST_CASE("hat and vee") {
  const SkewMat e3 = hat({0.0, 0.0, 1.0});
  CHECK(e3(0, 1) == -1.0);
  CHECK(e3(1, 0) == 1.0);
  CHECK(e3(2, 0) == 0.0);
  CHECK(e3(2, 1) == 0.0);

  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const Vec3 v{oracle::uniform(rng, -2, 2), oracle::uniform(rng, -2, 2),
                 oracle::uniform(rng, -2, 2)};
    const Vec3 w{oracle::uniform(rng, -2, 2), oracle::uniform(rng, -2, 2),
                 oracle::uniform(rng, -2, 2)};
    const Vec3 round = vee(hat(v));
    for (int i = 0; i < 3; ++i) CHECK(round[i] == v[i]);
    // hat(v) w = v x w
    const Vec3 hv = hat(v).to_mat().apply3(w);
    const Vec3 cx = cross(v, w);
    for (int i = 0; i < 3; ++i) CHECK(hv[i] == doctest::Approx(cx[i]).epsilon(1e-15));
    // skew_inner(hat(x), hat(y)) = x . y
    CHECK(skew_inner(hat(v), hat(w)) == doctest::Approx(dot(v, w)).epsilon(1e-15));
  }

  CHECK_THROWS_AS(vee(SkewMat(4)), DimensionMismatch);
}

TEST_CASE("polar decomposition of an already-orthogonal matrix") {
  std::mt19937 rng(19);
  for (int n : {2, 3, 5}) {
    const RotMat r = oracle::random_rotation(rng, n);
    const PolarFactors f = polar_decompose(r.mat());
    CHECK(spectral_norm(f.u.mat() - r.mat()) < 1e-14);
    CHECK(spectral_norm(f.p.mat() - Mat::identity(n)) < 1e-14);
  }
}

TEST_CASE("polar decomposition of a positive scaling") {
  const Mat a = 2.5 * Mat::identity(3);
  const PolarFactors f = polar_decompose(a);
  CHECK(spectral_norm(f.u.mat() - Mat::identity(3)) < 1e-14);
  CHECK(spectral_norm(f.p.mat() - a) < 1e-13);
}

TEST_CASE("polar factor matches the eigendecomposition square root oracle") {
  // u = a (a^T a)^{-1/2}, computed without any Newton step.
  Mat a(2, {1.0, 1.0, 0.0, 1.0});
  const Mat root = oracle::spd_sqrt(a.transpose() * a);
  const Mat u_oracle = a * inverse(root);
  const PolarFactors f = polar_decompose(a);
  CHECK(spectral_norm(f.u.mat() - u_oracle) < 1e-13);
  CHECK(spectral_norm(f.u.mat() * f.p.mat() - a) < 1e-12 * spectral_norm(a));

  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 5;
    const RotMat r = oracle::random_rotation(rng, n);
    const SpdMat p = oracle::random_spd(rng, n);
    const Mat m = r.mat() * p.mat();
    const Mat u_o = m * inverse(oracle::spd_sqrt(m.transpose() * m));
    const PolarFactors g = polar_decompose(m);
    CHECK(spectral_norm(g.u.mat() - u_o) < 1e-12);
    CHECK(spectral_norm(g.u.mat() * g.p.mat() - m) < 1e-12 * spectral_norm(m));
    CHECK(g.u.orthogonality_error() < 1e-14);
  }
}

TEST_CASE("polar decomposition error paths") {
  CHECK_THROWS_AS(polar_decompose(Mat(3)), SingularInput);
  Mat flip = Mat::identity(3);
  flip(0, 0) = -1.0;
  CHECK_THROWS_AS(polar_decompose(flip), NegativeDeterminant);
}

TEST_CASE("polar Newton converges quadratically near rotations") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 4;
    const RotMat r = oracle::random_rotation(rng, n);
    Mat a = r.mat() + 0.15 * oracle::random_mat(rng, n, 0.5);
    if (determinant(a) <= 0.0) continue;
    const PolarFactors f = polar_decompose(a);
    if (spectral_norm(a - f.u.mat()) <= 0.5) CHECK(f.newton_iterations <= 12);
  }
}

TEST_CASE("polar projection is left equivariant") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 4;
    const RotMat q = oracle::random_rotation(rng, n);
    const Mat a = oracle::random_rotation(rng, n).mat() * oracle::random_spd(rng, n).mat();
    const RotMat lhs = polar_project(q.mat() * a);
    const RotMat rhs = polar_project(a);
    CHECK(spectral_norm(lhs.mat() - q.mat() * rhs.mat()) < 1e-13);
  }
}

TEST_CASE("lyap_spd special cases") {
  std::mt19937 rng(37);
  const SkewMat c = oracle::random_skew(rng, 4);

  // p = I: x = -c/2
  const SkewMat x1 = lyap_spd(SpdMat(Mat::identity(4)), c);
  CHECK((x1 + 0.5 * c).norm() < 1e-15);

  // diagonal p: x_ij = -c_ij / (li + lj)
  const std::vector<double> lam{0.5, 1.5, 2.0, 4.0};
  const SkewMat x2 = lyap_spd(SpdMat(Mat::diag(lam)), c);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      CHECK(x2(i, j) == doctest::Approx(-c(i, j) / (lam[i] + lam[j])).epsilon(1e-13));
}

TEST_CASE("lyap_spd matches the Kronecker oracle") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 5;  // up to 6
    const SpdMat p = oracle::random_spd(rng, n);
    const SkewMat c = oracle::random_skew(rng, n);
    const SkewMat x = lyap_spd(p, c);
    const Mat x_oracle = oracle::kron_lyap(p.mat(), c.to_mat());
    CHECK(spectral_norm(x.to_mat() - x_oracle) < 1e-12);
    const Mat residual = p.mat() * x.to_mat() + x.to_mat() * p.mat() + c.to_mat();
    const double scale = spectral_norm(p.mat()) * spectral_norm(x.to_mat()) +
                         spectral_norm(c.to_mat());
    CHECK(spectral_norm(residual) <= 1e-12 * scale);
  }
}

TEST_CASE("sylvester_rot special cases and oracle") {
  std::mt19937 rng(43);
  const SkewMat r = oracle::random_skew(rng, 3);

  const SkewMat x1 = sylvester_rot(RotMat::identity(3), r);
  CHECK((x1 - 0.5 * r).norm() < 1e-15);

  const SkewMat zero = sylvester_rot(oracle::random_rotation_near_identity(rng, 3, 0.3),
                                     SkewMat(3));
  CHECK(zero.norm() == 0.0);

  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 5;
    const RotMat m = oracle::random_rotation_near_identity(rng, n, 0.4);
    const SkewMat rhs = oracle::random_skew(rng, n);
    const SkewMat x = sylvester_rot(m, rhs);
    const Mat x_oracle = oracle::kron_sylvester(m.mat(), rhs.to_mat());
    CHECK(spectral_norm(x.to_mat() - x_oracle) < 1e-12);
    const Mat residual =
        m.mat() * x.to_mat() + x.to_mat() * m.mat().transpose() - rhs.to_mat();
    CHECK(spectral_norm(residual) < 1e-12 * std::max(1.0, x.norm()));
  }
}

TEST_CASE("sylvester_rot rejects far-from-identity coefficients") {
  // Rotation by pi about e3 is at spectral distance 2 from I.
  Mat m = Mat::identity(3);
  m(0, 0) = -1.0;
  m(1, 1) = -1.0;
  CHECK_THROWS_AS(sylvester_rot(RotMat(m), SkewMat(3)), IllConditioned);
}

TEST_CASE("lemma1 predicate") {
  CHECK(lemma1_predicate(Mat(3)));
  CHECK_FALSE(lemma1_predicate(-2.0 * Mat::identity(3)));
  CHECK_FALSE(lemma1_predicate(hat({0.0, 0.0, 0.4}).to_mat()));  // not symmetric

  // Cross-check against the polar projection itself on shifted spectra.
  std::mt19937 rng(47);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + trial % 4;
    Mat s = symmetrize(oracle::random_mat(rng, n, 0.45));
    CHECK(lemma1_predicate(s));
    const RotMat u = polar_project(Mat::identity(n) + s);
    CHECK(spectral_norm(u.mat() - Mat::identity(n)) < 1e-13);
  }
}

TEST_CASE("rotation and SPD invariants are enforced") {
  Mat bad = Mat::identity(3);
  bad(0, 1) = 1e-6;
  CHECK_THROWS_AS(RotMat{bad}, InvariantViolation);

  Mat notspd = Mat::diag({1.0, -0.5, 2.0});
  CHECK_THROWS_AS(SpdMat{notspd}, InvariantViolation);
  Mat asymm = Mat::identity(2);
  asymm(0, 1) = 0.1;
  CHECK_THROWS_AS(SpdMat{asymm}, InvariantViolation);
}
