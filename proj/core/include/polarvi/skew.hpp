#pragma once

#include <vector>

#include "polarvi/mat.hpp"

namespace polarvi {

/// Skew-symmetric n x n matrix. Only the strict upper triangle is stored
/// (row-major), so x(i,j) = -x(j,i) holds exactly by construction.
class SkewMat {
 public:
  SkewMat() = default;
  explicit SkewMat(int n);

  int dim() const { return n_; }
  int free_count() const { return static_cast<int>(u_.size()); }

  /// Entry with sign logic; i == j yields exactly 0.
  double operator()(int i, int j) const;
  /// Mutable reference to the stored entry, i < j required.
  double& upper(int i, int j);
  double upper(int i, int j) const;

  const std::vector<double>& packed() const { return u_; }
  double& packed(int k) { return u_[k]; }

  Mat to_mat() const;

  SkewMat& operator+=(const SkewMat& o);
  SkewMat& operator-=(const SkewMat& o);
  SkewMat& operator*=(double s);
  friend SkewMat operator+(SkewMat a, const SkewMat& b) { return a += b; }
  friend SkewMat operator-(SkewMat a, const SkewMat& b) { return a -= b; }
  friend SkewMat operator*(SkewMat a, double s) { return a *= s; }
  friend SkewMat operator*(double s, SkewMat a) { return a *= s; }
  SkewMat operator-() const;
  SkewMat transpose() const { return -*this; }

  /// Euclidean norm of the free entries, i.e. sqrt(skew_inner(x, x)).
  double norm() const;

  bool all_finite() const;

 private:
  int k_of(int i, int j) const {  // i < j
    return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
  }
  int n_ = 0;
  std::vector<double> u_;
};

/// asym(a) = a - a^T.
SkewMat asym(const Mat& a);

/// Inner product on sk(n): sum over i<j of x_ij y_ij = tr(x y^T)/2.
double skew_inner(const SkewMat& x, const SkewMat& y);

/// Hat map R^3 -> sk(3), fixed so that hat(v) w = v x w. Under this
/// convention skew_inner(hat(x), hat(y)) equals the Euclidean dot x . y.
SkewMat hat(const Vec3& v);

/// Inverse of hat; requires n = 3.
Vec3 vee(const SkewMat& x);

}  // namespace polarvi
