#pragma once

#include <vector>

#include "polarvi/mat.hpp"

namespace polarvi {

/// LU factorization with partial pivoting of a square matrix.
/// Throws SingularInput when a pivot falls below 1e-14 times the largest
/// initial entry magnitude.
class Lu {
 public:
  explicit Lu(const Mat& a);

  double determinant() const { return det_; }
  std::vector<double> solve(const std::vector<double>& rhs) const;
  Mat solve(const Mat& rhs) const;
  Mat inverse() const;

 private:
  int n_;
  Mat lu_;
  std::vector<int> perm_;
  int perm_sign_;
  double det_;
};

double determinant(const Mat& a);
Mat inverse(const Mat& a);

/// Solves the dense linear system a x = b.
std::vector<double> solve_linear(const Mat& a, const std::vector<double>& b);

/// Spectral norm (largest singular value) via power iteration on a^T a,
/// capped at 100 iterations.
double spectral_norm(const Mat& a);

struct SymEigen {
  Mat q;                       // columns are orthonormal eigenvectors
  std::vector<double> values;  // matching eigenvalues
};

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi sweeps.
/// The input is symmetrized first, so mild round-off asymmetry is tolerated.
SymEigen sym_eigen(const Mat& a);

}  // namespace polarvi
