#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "polarvi/dense.hpp"
#include "polarvi/mat.hpp"
#include "polarvi/skew.hpp"

using namespace polarvi;

TEST_CASE("Lu solves and inverts small systems") {
  Mat a(2, {2.0, 1.0, 1.0, 3.0});
  const Lu lu(a);
  CHECK(lu.determinant() == doctest::Approx(5.0).epsilon(1e-14));
  const auto x = lu.solve(std::vector<double>{5.0, 10.0});
  CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(3.0).epsilon(1e-14));

  const Mat id = a * lu.inverse();
  CHECK(spectral_norm(id - Mat::identity(2)) < 1e-14);
}

TEST_CASE("Lu flags singular input") {
  Mat a(2, {1.0, 2.0, 2.0, 4.0});
  CHECK_THROWS_AS(Lu{a}, SingularInput);
  CHECK(determinant(a) == 0.0);
}

TEST_CASE("spectral norm matches known values") {
  CHECK(spectral_norm(Mat::diag({3.0, -5.0, 1.0})) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(spectral_norm(Mat(4)) == 0.0);
  // Rank-one uv^T has spectral norm |u||v|.
  Mat m(3);
  const double u[3] = {1.0, 2.0, -2.0};
  const double v[3] = {2.0, 1.0, 2.0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = u[i] * v[j];
  CHECK(spectral_norm(m) == doctest::Approx(9.0).epsilon(1e-12));
}

TEST_CASE("sym_eigen reconstructs the input") {
  std::mt19937 rng(91);
  for (int n : {2, 3, 5, 6}) {
    const Mat a = symmetrize(oracle::random_mat(rng, n));
    const SymEigen e = sym_eigen(a);
    Mat d(n);
    for (int i = 0; i < n; ++i) d(i, i) = e.values[i];
    CHECK(spectral_norm(e.q * d * e.q.transpose() - a) < 1e-13);
    CHECK(spectral_norm(e.q * e.q.transpose() - Mat::identity(n)) < 1e-13);
  }
}

TEST_CASE("trace identities on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 4;
    const Mat a = oracle::random_mat(rng, n);
    const Mat b = oracle::random_mat(rng, n);
    const Mat p = oracle::random_mat(rng, n);
    const Mat q = oracle::random_mat(rng, n);
    // tr(a b^T) = tr(a^T b)
    const double lhs1 = oracle::trace_prod_t(a, b);
    double rhs1 = 0.0;
    {
      const Mat atb = a.transpose() * b;
      for (int i = 0; i < n; ++i) rhs1 += atb(i, i);
    }
    CHECK(lhs1 == doctest::Approx(rhs1).epsilon(1e-13));
    // tr(a (p b q)^T) = tr((p^T a q^T) b^T)
    const double lhs2 = oracle::trace_prod_t(a, p * b * q);
    const double rhs2 = oracle::trace_prod_t(p.transpose() * a * q.transpose(), b);
    CHECK(lhs2 == doctest::Approx(rhs2).epsilon(1e-13));
  }
}

TEST_CASE("dimension mismatches throw") {
  CHECK_THROWS_AS(Mat(2) + Mat(3), DimensionMismatch);
  CHECK_THROWS_AS(Mat(3, {1.0, 2.0}), DimensionMismatch);
  CHECK_THROWS_AS(Mat(2).apply3({1.0, 0.0, 0.0}), DimensionMismatch);
}
