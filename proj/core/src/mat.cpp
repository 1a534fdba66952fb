#include "polarvi/mat.hpp"

#include <cmath>
#include <utility>

namespace polarvi {

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3 operator*(double s, const Vec3& a) {
  return {s * a[0], s * a[1], s * a[2]};
}

Mat::Mat(int n, std::vector<double> entries) : n_(n), a_(std::move(entries)) {
  if (n < 1) throw DimensionMismatch("Mat: dimension must be positive");
  if (a_.size() != static_cast<std::size_t>(n) * n)
    throw DimensionMismatch("Mat: entry count does not match dimension");
}

Mat Mat::identity(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::diag(const std::vector<double>& d) {
  Mat m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::transpose() const {
  Mat t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat& Mat::operator+=(const Mat& o) {
  require_same_dim(*this, o, "Mat::operator+=");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require_same_dim(*this, o, "Mat::operator-=");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Mat& Mat::operator*=(double s) {
  for (double& v : a_) v *= s;
  return *this;
}

Mat Mat::operator-() const {
  Mat m = *this;
  m *= -1.0;
  return m;
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same_dim(a, b, "Mat::operator*");
  const int n = a.dim();
  Mat c(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Vec3 Mat::apply3(const Vec3& v) const {
  if (n_ != 3) throw DimensionMismatch("Mat::apply3: dimension is not 3");
  Vec3 r{};
  for (int i = 0; i < 3; ++i)
    r[i] = (*this)(i, 0) * v[0] + (*this)(i, 1) * v[1] + (*this)(i, 2) * v[2];
  return r;
}

double Mat::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

double Mat::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

bool Mat::all_finite() const {
  for (double v : a_)
    if (!std::isfinite(v)) return false;
  return true;
}

Mat symmetrize(const Mat& a) {
  const int n = a.dim();
  Mat s(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s(i, j) = 0.5 * (a(i, j) + a(j, i));
  return s;
}

void require_same_dim(const Mat& a, const Mat& b, const char* where) {
  if (a.dim() != b.dim())
    throw DimensionMismatch(std::string(where) + ": dimension mismatch");
}

}  // namespace polarvi
