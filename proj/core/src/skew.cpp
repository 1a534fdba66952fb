#include "polarvi/skew.hpp"

#include <cmath>

namespace polarvi {

SkewMat::SkewMat(int n) : n_(n), u_(static_cast<std::size_t>(n) * (n - 1) / 2, 0.0) {
  if (n < 2) throw DimensionMismatch("SkewMat: dimension must be at least 2");
}

double SkewMat::operator()(int i, int j) const {
  if (i == j) return 0.0;
  return i < j ? u_[k_of(i, j)] : -u_[k_of(j, i)];
}

double& SkewMat::upper(int i, int j) {
  if (i >= j) throw DimensionMismatch("SkewMat::upper: need i < j");
  return u_[k_of(i, j)];
}

double SkewMat::upper(int i, int j) const {
  if (i >= j) throw DimensionMismatch("SkewMat::upper: need i < j");
  return u_[k_of(i, j)];
}

Mat SkewMat::to_mat() const {
  Mat m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      const double v = u_[k_of(i, j)];
      m(i, j) = v;
      m(j, i) = -v;
    }
  return m;
}

SkewMat& SkewMat::operator+=(const SkewMat& o) {
  if (n_ != o.n_) throw DimensionMismatch("SkewMat::operator+=: dimension mismatch");
  for (std::size_t k = 0; k < u_.size(); ++k) u_[k] += o.u_[k];
  return *this;
}

SkewMat& SkewMat::operator-=(const SkewMat& o) {
  if (n_ != o.n_) throw DimensionMismatch("SkewMat::operator-=: dimension mismatch");
  for (std::size_t k = 0; k < u_.size(); ++k) u_[k] -= o.u_[k];
  return *this;
}

SkewMat& SkewMat::operator*=(double s) {
  for (double& v : u_) v *= s;
  return *this;
}

SkewMat SkewMat::operator-() const {
  SkewMat r = *this;
  r *= -1.0;
  return r;
}

double SkewMat::norm() const {
  double s = 0.0;
  for (double v : u_) s += v * v;
  return std::sqrt(s);
}

bool SkewMat::all_finite() const {
  for (double v : u_)
    if (!std::isfinite(v)) return false;
  return true;
}

SkewMat asym(const Mat& a) {
  SkewMat s(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) s.upper(i, j) = a(i, j) - a(j, i);
  return s;
}

double skew_inner(const SkewMat& x, const SkewMat& y) {
  if (x.dim() != y.dim())
    throw DimensionMismatch("skew_inner: dimension mismatch");
  double s = 0.0;
  for (int k = 0; k < x.free_count(); ++k) s += x.packed()[k] * y.packed()[k];
  return s;
}

SkewMat hat(const Vec3& v) {
  SkewMat x(3);
  x.upper(0, 1) = -v[2];
  x.upper(0, 2) = v[1];
  x.upper(1, 2) = -v[0];
  return x;
}

Vec3 vee(const SkewMat& x) {
  if (x.dim() != 3) throw DimensionMismatch("vee: dimension is not 3");
  return {-x.upper(1, 2), x.upper(0, 2), -x.upper(0, 1)};
}

}  // namespace polarvi
