#include "polarvi/dense.hpp"

#include <cmath>

namespace polarvi {

Lu::Lu(const Mat& a) : n_(a.dim()), lu_(a), perm_(n_), perm_sign_(1) {
  const double scale = a.max_abs();
  const double tiny = 1e-14 * (scale > 0.0 ? scale : 1.0);
  for (int i = 0; i < n_; ++i) perm_[i] = i;
  for (int k = 0; k < n_; ++k) {
    int piv = k;
    double best = std::abs(lu_(k, k));
    for (int i = k + 1; i < n_; ++i) {
      const double v = std::abs(lu_(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best <= tiny) throw SingularInput("Lu: matrix singular to tolerance");
    if (piv != k) {
      for (int j = 0; j < n_; ++j) std::swap(lu_(k, j), lu_(piv, j));
      std::swap(perm_[k], perm_[piv]);
      perm_sign_ = -perm_sign_;
    }
    const double inv = 1.0 / lu_(k, k);
    for (int i = k + 1; i < n_; ++i) {
      const double m = lu_(i, k) * inv;
      lu_(i, k) = m;
      for (int j = k + 1; j < n_; ++j) lu_(i, j) -= m * lu_(k, j);
    }
  }
  det_ = perm_sign_;
  for (int k = 0; k < n_; ++k) det_ *= lu_(k, k);
}

std::vector<double> Lu::solve(const std::vector<double>& rhs) const {
  if (static_cast<int>(rhs.size()) != n_)
    throw DimensionMismatch("Lu::solve: rhs size mismatch");
  std::vector<double> x(n_);
  for (int i = 0; i < n_; ++i) x[i] = rhs[perm_[i]];
  for (int i = 1; i < n_; ++i)
    for (int j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
  for (int i = n_ - 1; i >= 0; --i) {
    for (int j = i + 1; j < n_; ++j) x[i] -= lu_(i, j) * x[j];
    x[i] /= lu_(i, i);
  }
  return x;
}

Mat Lu::solve(const Mat& rhs) const {
  Mat x(n_);
  std::vector<double> col(n_);
  for (int j = 0; j < n_; ++j) {
    for (int i = 0; i < n_; ++i) col[i] = rhs(i, j);
    const std::vector<double> y = solve(col);
    for (int i = 0; i < n_; ++i) x(i, j) = y[i];
  }
  return x;
}

Mat Lu::inverse() const { return solve(Mat::identity(n_)); }

double determinant(const Mat& a) {
  // LU throws on exact singularity; a zero determinant within tolerance is a
  // legitimate answer here.
  try {
    return Lu(a).determinant();
  } catch (const SingularInput&) {
    return 0.0;
  }
}

Mat inverse(const Mat& a) { return Lu(a).inverse(); }

std::vector<double> solve_linear(const Mat& a, const std::vector<double>& b) {
  return Lu(a).solve(b);
}

double spectral_norm(const Mat& a) {
  const int n = a.dim();
  // Power iteration on b = a^T a. The deterministic start vector has
  // distinct, nonzero components so it is never orthogonal to the dominant
  // eigenspace for the matrices seen here.
  const Mat b = a.transpose() * a;
  std::vector<double> v(n);
  double nrm = 0.0;
  for (int i = 0; i < n; ++i) {
    v[i] = 1.0 / (1.0 + i);
    nrm += v[i] * v[i];
  }
  nrm = std::sqrt(nrm);
  for (int i = 0; i < n; ++i) v[i] /= nrm;

  double lambda = 0.0;
  std::vector<double> w(n);
  for (int iter = 0; iter < 100; ++iter) {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += b(i, j) * v[j];
      w[i] = s;
    }
    double rayleigh = 0.0;
    double wn = 0.0;
    for (int i = 0; i < n; ++i) {
      rayleigh += v[i] * w[i];
      wn += w[i] * w[i];
    }
    wn = std::sqrt(wn);
    if (wn == 0.0) return 0.0;
    for (int i = 0; i < n; ++i) v[i] = w[i] / wn;
    if (std::abs(rayleigh - lambda) <= 1e-14 * std::max(std::abs(rayleigh), 1e-300)) {
      lambda = rayleigh;
      break;
    }
    lambda = rayleigh;
  }
  return std::sqrt(std::max(lambda, 0.0));
}

SymEigen sym_eigen(const Mat& input) {
  const int n = input.dim();
  Mat a = symmetrize(input);
  Mat q = Mat::identity(n);

  auto off_diag = [&a, n]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
  };

  const double stop = 1e-15 * std::max(a.frobenius_norm(), 1e-300);
  for (int sweep = 0; sweep < 50 && off_diag() > stop; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int r = p + 1; r < n; ++r) {
        const double apq = a(p, r);
        if (apq == 0.0) continue;
        const double theta = (a(r, r) - a(p, p)) / (2.0 * apq);
        // Stable rotation choice (smaller root), after Golub & Van Loan.
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, r);
          a(k, p) = c * akp - s * akq;
          a(k, r) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(r, k);
          a(p, k) = c * apk - s * aqk;
          a(r, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double qkp = q(k, p);
          const double qkq = q(k, r);
          q(k, p) = c * qkp - s * qkq;
          q(k, r) = s * qkp + c * qkq;
        }
      }
    }
  }

  SymEigen e{std::move(q), std::vector<double>(n)};
  for (int i = 0; i < n; ++i) e.values[i] = a(i, i);
  return e;
}

}  // namespace polarvi
