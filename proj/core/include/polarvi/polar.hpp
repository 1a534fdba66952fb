#pragma once

#include "polarvi/dense.hpp"
#include "polarvi/mat.hpp"
#include "polarvi/skew.hpp"

namespace polarvi {

/// Element of SO(n). Construction validates ||m m^T - I||_2 <= 1e-13 and
/// det(m) > 0; products and transposes of rotations skip re-validation.
class RotMat {
 public:
  RotMat() = default;
  explicit RotMat(const Mat& m);

  static RotMat identity(int n) { return RotMat(Mat::identity(n), Unchecked{}); }

  int dim() const { return m_.dim(); }
  const Mat& mat() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  RotMat transpose() const { return RotMat(m_.transpose(), Unchecked{}); }

  friend RotMat operator*(const RotMat& a, const RotMat& b) {
    return RotMat(a.m_ * b.m_, Unchecked{});
  }
  friend Mat operator*(const RotMat& a, const Mat& b) { return a.m_ * b; }
  friend Mat operator*(const Mat& a, const RotMat& b) { return a * b.m_; }

  /// ||m m^T - I||_2 of this rotation; the structural drift metric.
  double orthogonality_error() const;

 private:
  struct Unchecked {};
  RotMat(Mat m, Unchecked) : m_(std::move(m)) {}
  friend class PolarFactors;
  friend RotMat unchecked_rotation(Mat m);
  Mat m_;
};

/// Internal escape hatch for products known to be orthogonal by construction.
RotMat unchecked_rotation(Mat m);

/// Symmetric positive-definite matrix. Construction symmetrizes mild
/// round-off, validates symmetry to 1e-13, and checks positivity via the
/// Jacobi eigendecomposition, which is then kept for later Lyapunov solves.
class SpdMat {
 public:
  SpdMat() = default;
  explicit SpdMat(const Mat& m);

  int dim() const { return m_.dim(); }
  const Mat& mat() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  const SymEigen& eigen() const { return eig_; }

 private:
  Mat m_;
  SymEigen eig_;
};

/// Result of the polar decomposition a = u p.
struct PolarFactors {
  RotMat u;
  SpdMat p;
  int newton_iterations = 0;
};

/// Polar decomposition of an invertible matrix with positive determinant by
/// Newton iteration u <- (u + u^{-T})/2 started at a. Stops when the spectral
/// norm of the update falls below 1e-15, cap 50 iterations. The symmetric
/// factor is recovered as symmetrize(u^T a).
PolarFactors polar_decompose(const Mat& a);

/// Just the orthogonal factor of the polar decomposition.
RotMat polar_project(const Mat& a);

/// True iff s is symmetric (to 1e-12 in spectral norm) with every eigenvalue
/// greater than -1, i.e. exactly when the polar projection of I + s is I.
bool lemma1_predicate(const Mat& s);

}  // namespace polarvi
