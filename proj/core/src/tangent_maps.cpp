#include "polarvi/tangent_maps.hpp"

#include <cmath>
#include <utility>

#include "polarvi/dense.hpp"

namespace polarvi {

SkewMat dpol(const PolarFactors& factors, const Mat& b) {
  const Mat& u = factors.u.mat();
  return lyap_spd(factors.p, asym(b.transpose() * u));
}

Mat dpol_star(const PolarFactors& factors, const SkewMat& w) {
  return factors.u * lyap_spd(factors.p, w.transpose()).to_mat();
}

StageGeometry::StageGeometry(const RotMat& base, std::vector<PolarFactors> factors,
                             std::vector<SkewMat> omegas,
                             const ButcherTableau& tableau, double h)
    : s_(tableau.s),
      h_(h),
      a_(tableau.a),
      factors_(std::move(factors)),
      omegas_(std::move(omegas)) {
  tableau.validate();
  if (static_cast<int>(factors_.size()) != s_ ||
      static_cast<int>(omegas_.size()) != s_)
    throw DimensionMismatch("StageGeometry: stage count mismatch");
  n_ = base.dim();
  rel_.reserve(static_cast<std::size_t>(s_) * s_);
  for (int j = 0; j < s_; ++j)
    for (int l = 0; l < s_; ++l)
      rel_.push_back(factors_[j].u.transpose() * factors_[l].u);
  base_transport_.reserve(s_);
  for (int l = 0; l < s_; ++l) base_transport_.push_back(base * factors_[l].u);
}

namespace {

/// Lyap(p_l, s_l^T) for every stage, the common building block of the chain.
std::vector<Mat> stage_lyapunovs(const StageGeometry& geom,
                                 const std::vector<SkewMat>& sols) {
  std::vector<Mat> out;
  out.reserve(geom.stages());
  for (int l = 0; l < geom.stages(); ++l)
    out.push_back(
        lyap_spd_eig(geom.p_factor(l).eigen(), sols[l].transpose()).to_mat());
  return out;
}

}  // namespace

std::vector<SkewMat> chain_solve(const StageGeometry& geom,
                                 const std::vector<SkewMat>& rhs,
                                 const FixedPointConfig& cfg) {
  cfg.validate();
  const int s = geom.stages();
  if (static_cast<int>(rhs.size()) != s)
    throw DimensionMismatch("chain_solve: rhs stage count mismatch");
  const double h = geom.step_size();

  std::vector<SkewMat> sols(s, SkewMat(geom.dim()));
  double diff = 0.0;
  int used = 0;
  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    const std::vector<Mat> lyap = stage_lyapunovs(geom, sols);
    diff = 0.0;
    std::vector<SkewMat> next(s, SkewMat(geom.dim()));
    for (int j = 0; j < s; ++j) {
      Mat coupling(geom.dim());
      for (int l = 0; l < s; ++l) {
        const double alj = geom.a(l, j);
        if (alj == 0.0) continue;
        coupling += alj * (geom.rel(j, l) * lyap[l]);
      }
      next[j] = rhs[j] + asym(h * (coupling * geom.omega(j).transpose().to_mat()));
      diff = std::max(diff, spectral_norm((next[j] - sols[j]).to_mat()));
    }
    sols = std::move(next);
    used = iter + 1;
    if (diff < cfg.tol) return sols;
  }
  throw NoConvergence("chain_solve: fixed point did not converge", used, diff);
}

SkewMat apply_psi_star(const StageGeometry& geom,
                       const std::vector<SkewMat>& sols, int k) {
  const std::vector<Mat> lyap = stage_lyapunovs(geom, sols);
  Mat acc(geom.dim());
  for (int l = 0; l < geom.stages(); ++l) {
    const double alk = geom.a(l, k);
    if (alk == 0.0) continue;
    acc += alk * (geom.rel(k, l) * lyap[l]);
  }
  return asym(acc);
}

SkewMat apply_varphi_star(const StageGeometry& geom,
                          const std::vector<SkewMat>& sols) {
  const std::vector<Mat> lyap = stage_lyapunovs(geom, sols);
  Mat acc(geom.dim());
  for (int l = 0; l < geom.stages(); ++l)
    acc += geom.base_transport(l) * lyap[l];
  return asym(acc);
}

}  // namespace polarvi
