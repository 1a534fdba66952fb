#include "polarvi/polar.hpp"

#include <cmath>
#include <string>

namespace polarvi {

RotMat::RotMat(const Mat& m) : m_(m) {
  const Mat gram = m_ * m_.transpose();
  const double err = spectral_norm(gram - Mat::identity(m_.dim()));
  if (err > 1e-13)
    throw InvariantViolation("RotMat: ||m m^T - I||_2 = " + std::to_string(err) +
                             " exceeds 1e-13");
  if (determinant(m_) <= 0.0)
    throw InvariantViolation("RotMat: determinant is not positive");
}

double RotMat::orthogonality_error() const {
  return spectral_norm(m_ * m_.transpose() - Mat::identity(m_.dim()));
}

RotMat unchecked_rotation(Mat m) { return {std::move(m), RotMat::Unchecked{}}; }

SpdMat::SpdMat(const Mat& m) {
  const int n = m.dim();
  double asym_max = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      asym_max = std::max(asym_max, std::abs(m(i, j) - m(j, i)));
  if (asym_max > 1e-13 * std::max(1.0, m.max_abs()))
    throw InvariantViolation("SpdMat: input is not symmetric to 1e-13");
  m_ = symmetrize(m);
  eig_ = sym_eigen(m_);
  for (double lam : eig_.values)
    if (lam <= 0.0)
      throw InvariantViolation("SpdMat: eigenvalue " + std::to_string(lam) +
                               " is not positive");
}

PolarFactors polar_decompose(const Mat& a) {
  const double det = determinant(a);
  const double scale = a.max_abs();
  if (std::abs(det) <= 1e-14 * std::pow(std::max(scale, 1e-300), a.dim()))
    throw SingularInput("polar_decompose: input singular to tolerance");
  if (det < 0.0)
    throw NegativeDeterminant("polar_decompose: determinant is negative");

  Mat u = a;
  int used = 0;
  bool converged = false;
  double diff = 0.0;
  for (int k = 0; k < 50; ++k) {
    Mat next = u;
    next += inverse(u).transpose();
    next *= 0.5;
    diff = spectral_norm(next - u);
    u = std::move(next);
    used = k + 1;
    if (diff < 1e-15) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw NoConvergence("polar_decompose: Newton iteration cap hit", used, diff);

  PolarFactors f{RotMat(u), SpdMat(symmetrize(u.transpose() * a)), used};
  return f;
}

RotMat polar_project(const Mat& a) { return polar_decompose(a).u; }

bool lemma1_predicate(const Mat& s) {
  SkewMat anti = asym(s);
  if (spectral_norm(anti.to_mat()) > 1e-12) return false;
  const SymEigen eig = sym_eigen(s);
  for (double lam : eig.values)
    if (lam <= -1.0) return false;
  return true;
}

}  // namespace polarvi
