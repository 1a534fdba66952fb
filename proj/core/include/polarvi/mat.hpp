#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "polarvi/errors.hpp"

namespace polarvi {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
Vec3 cross(const Vec3& a, const Vec3& b);
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& a);

/// Dense square matrix of doubles, row-major. Dimensions here are tiny
/// (n <= 16 throughout), so everything below is the straightforward O(n^3)
/// dense kernel with no blocking.
class Mat {
 public:
  Mat() = default;
  explicit Mat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {
    if (n < 1) throw DimensionMismatch("Mat: dimension must be positive");
  }
  Mat(int n, std::vector<double> entries);

  static Mat identity(int n);
  static Mat diag(const std::vector<double>& d);

  int dim() const { return n_; }

  double operator()(int i, int j) const { return a_[idx(i, j)]; }
  double& operator()(int i, int j) { return a_[idx(i, j)]; }

  const std::vector<double>& data() const { return a_; }

  Mat transpose() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(double s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, double s) { return a *= s; }
  friend Mat operator*(double s, Mat a) { return a *= s; }
  Mat operator-() const;

  friend Mat operator*(const Mat& a, const Mat& b);

  Vec3 apply3(const Vec3& v) const;

  double max_abs() const;
  double frobenius_norm() const;

  bool all_finite() const;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }
  int n_ = 0;
  std::vector<double> a_;
};

/// (a + a^T)/2, killing round-off asymmetry.
Mat symmetrize(const Mat& a);

void require_same_dim(const Mat& a, const Mat& b, const char* where);

}  // namespace polarvi
