#include "polarvi/lyapunov.hpp"

#include <cmath>

#include "polarvi/dense.hpp"

namespace polarvi {

SkewMat lyap_spd(const SpdMat& p, const SkewMat& c) {
  if (p.dim() != c.dim()) throw DimensionMismatch("lyap_spd: dimension mismatch");
  return lyap_spd_eig(p.eigen(), c);
}

SkewMat lyap_spd_eig(const SymEigen& eig, const SkewMat& c) {
  const int n = c.dim();
  double lam_max = 0.0;
  for (double lam : eig.values) lam_max = std::max(lam_max, std::abs(lam));
  const double floor = 1e-14 * std::max(lam_max, 1e-300);

  // Transform c into the eigenbasis, divide by the eigenvalue pair sums,
  // transform back. The transformed solve is exact for diagonal coefficients.
  const Mat ct = eig.q.transpose() * c.to_mat() * eig.q;
  Mat xt(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double denom = eig.values[i] + eig.values[j];
      if (std::abs(denom) <= floor)
        throw NearSingular("lyap_spd: eigenvalue pair sum below threshold");
      xt(i, j) = -ct(i, j) / denom;
    }
  }
  const Mat x = eig.q * xt * eig.q.transpose();
  SkewMat out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.upper(i, j) = 0.5 * (x(i, j) - x(j, i));
  return out;
}

SkewMat sylvester_rot(const RotMat& m, const SkewMat& r) {
  const int n = m.dim();
  if (n != r.dim()) throw DimensionMismatch("sylvester_rot: dimension mismatch");
  if (n > 16)
    throw DimensionMismatch("sylvester_rot: dense vectorization guarded to n <= 16");
  if (spectral_norm(m.mat() - Mat::identity(n)) >= 1.0)
    throw IllConditioned("sylvester_rot: coefficient too far from identity");

  // Column-stacked vectorization: m x + x m^T = r becomes
  // (I (x) m + m (x) I) vec(x) = vec(r).
  const int nn = n * n;
  Mat sys(nn);
  const Mat& mm = m.mat();
  for (int col_j = 0; col_j < n; ++col_j) {
    for (int row_i = 0; row_i < n; ++row_i) {
      const int eq = col_j * n + row_i;
      // I (x) m block: couples entries within column col_j.
      for (int k = 0; k < n; ++k) sys(eq, col_j * n + k) += mm(row_i, k);
      // m (x) I block: couples entry (row_i, k) across columns.
      for (int k = 0; k < n; ++k) sys(eq, k * n + row_i) += mm(col_j, k);
    }
  }
  std::vector<double> rhs(nn);
  const Mat rm = r.to_mat();
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) rhs[j * n + i] = rm(i, j);

  std::vector<double> xv;
  try {
    xv = solve_linear(sys, rhs);
  } catch (const SingularInput&) {
    throw IllConditioned("sylvester_rot: vectorized system singular");
  }
  Mat x(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) x(i, j) = xv[j * n + i];
  // The unique solution is skew; symmetrized packing removes round-off.
  SkewMat out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.upper(i, j) = 0.5 * (x(i, j) - x(j, i));
  return out;
}

}  // namespace polarvi
