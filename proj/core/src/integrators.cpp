#include "polarvi/integrators.hpp"

#include <cmath>

#include "polarvi/dense.hpp"
#include "polarvi/lyapunov.hpp"

namespace polarvi {

namespace {

void require_positive_step(double h) {
  if (!(h > 0.0)) throw ScenarioError("step size must be positive");
}

void require_nonzero_weights(const ButcherTableau& t) {
  for (double w : t.b)
    if (w == 0.0) throw ZeroWeight("stage equations divide by the weights b_i");
}

/// asym(u^T g lambda omega^T), the multiplier force entering the chains.
SkewMat multiplier_force(const RotMat& u, const RotMat& g, const SkewMat& lambda,
                         const SkewMat& omega) {
  const Mat m = u.transpose() * (g * (lambda.to_mat() * omega.transpose().to_mat()));
  return asym(m);
}

}  // namespace

std::pair<CotangentState, StageCache> vpd_step(const LeftTrivHamiltonian& sys,
                                               const ButcherTableau& t, double h,
                                               const CotangentState& st,
                                               const FixedPointConfig& cfg) {
  cfg.validate();
  t.validate();
  require_positive_step(h);
  require_nonzero_weights(t);
  const int s = t.s;
  const int n = st.g.dim();
  const RotMat& g0 = st.g;
  const RotMat g0t = g0.transpose();

  // Initial guesses are the exact solution for a vanishing Hamiltonian.
  std::vector<SkewMat> mu(s, st.p);
  std::vector<SkewMat> omega(s, SkewMat(n));
  std::vector<RotMat> u(s, g0);
  std::vector<PolarFactors> factors;
  RotMat g1 = g0;
  SkewMat lambda = -0.5 * st.p;

  int used = 0;
  double diff = 0.0;
  bool converged = false;
  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    diff = 0.0;

    for (int i = 0; i < s; ++i) omega[i] = sys.d_mu(u[i], mu[i]);

    // Stage rotations, each sweep using the freshest neighbours.
    std::vector<PolarFactors> new_factors;
    new_factors.reserve(s);
    for (int i = 0; i < s; ++i) {
      Mat arg = g0.mat();
      for (int j = 0; j < s; ++j) {
        const double aij = t.at(i, j);
        if (aij == 0.0) continue;
        arg += (h * aij) * (u[j] * omega[j].to_mat());
      }
      new_factors.push_back(polar_decompose(arg));
      diff = std::max(diff, spectral_norm(new_factors.back().u.mat() - u[i].mat()));
      u[i] = new_factors.back().u;
    }
    factors = std::move(new_factors);

    Mat endpoint_arg = g0.mat();
    for (int i = 0; i < s; ++i)
      endpoint_arg += (h * t.b[i]) * (u[i] * omega[i].to_mat());
    const RotMat g1_next = polar_project(endpoint_arg);
    diff = std::max(diff, spectral_norm(g1_next.mat() - g1.mat()));
    g1 = g1_next;

    // One stacked chain solve serves both the multiplier equation and all
    // the stage momentum equations.
    const StageGeometry geom(g0t, factors, omega, t, h);
    std::vector<SkewMat> rhs;
    rhs.reserve(s);
    for (int i = 0; i < s; ++i)
      rhs.push_back(t.b[i] * (sys.d_g(u[i], mu[i]) -
                              multiplier_force(u[i], g1, lambda, omega[i])));
    const std::vector<SkewMat> sols = chain_solve(geom, rhs, cfg);

    const SkewMat lambda_rhs = -st.p + h * apply_varphi_star(geom, sols);
    const SkewMat lambda_next = sylvester_rot(g0t * g1, lambda_rhs);
    diff = std::max(diff, (lambda_next - lambda).norm());
    lambda = lambda_next;

    for (int k = 0; k < s; ++k) {
      SkewMat mu_next = -asym(u[k].transpose() * (g1 * lambda.to_mat())) +
                        (h / t.b[k]) * apply_psi_star(geom, sols, k);
      diff = std::max(diff, (mu_next - mu[k]).norm());
      mu[k] = std::move(mu_next);
    }

    used = iter + 1;
    if (diff < cfg.tol) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw NoConvergence("vpd_step: fixed point did not converge", used, diff);

  Mat endpoint_arg = g0.mat();
  for (int i = 0; i < s; ++i)
    endpoint_arg += (h * t.b[i]) * (u[i] * omega[i].to_mat());
  const SkewMat p1 =
      asym(g1.transpose() * (endpoint_arg * lambda.transpose().to_mat()));

  StageCache cache{std::move(mu), std::move(omega), std::move(u),
                   std::move(lambda), g1, std::move(factors), used};
  return {CotangentState{g1, p1}, std::move(cache)};
}

std::pair<ReducedState, StageCache> lie_poisson_step(const ReducedHamiltonian& sys,
                                                     const ButcherTableau& t, double h,
                                                     const ReducedState& st,
                                                     const FixedPointConfig& cfg) {
  cfg.validate();
  t.validate();
  require_positive_step(h);
  require_nonzero_weights(t);
  const int s = t.s;
  const int n = st.mu.dim();
  const Mat eye = Mat::identity(n);

  std::vector<SkewMat> mu(s, st.mu);
  std::vector<SkewMat> omega(s, SkewMat(n));
  // theta_t[i] holds Theta_i^T, the orthogonal factor of the stage argument.
  std::vector<RotMat> theta_t(s, RotMat::identity(n));
  std::vector<PolarFactors> factors;
  RotMat f0 = RotMat::identity(n);
  SkewMat lambda = -0.5 * st.mu;

  int used = 0;
  double diff = 0.0;
  bool converged = false;
  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    diff = 0.0;

    for (int i = 0; i < s; ++i) omega[i] = sys.d_mu(mu[i]);

    const Mat f0t = f0.transpose().mat();
    std::vector<PolarFactors> new_factors;
    new_factors.reserve(s);
    for (int i = 0; i < s; ++i) {
      Mat arg = f0t;
      for (int j = 0; j < s; ++j) {
        const double aij = t.at(i, j);
        if (aij == 0.0) continue;
        arg += (h * aij) * (theta_t[j] * omega[j].to_mat());
      }
      new_factors.push_back(polar_decompose(arg));
      diff = std::max(diff,
                      spectral_norm(new_factors.back().u.mat() - theta_t[i].mat()));
      theta_t[i] = new_factors.back().u;
    }
    factors = std::move(new_factors);

    // Explicit form of the endpoint condition: f_0 is the polar projection
    // of I + h f_0 sum_i b_i Theta_i^T Omega_i.
    Mat weighted(n);
    for (int i = 0; i < s; ++i)
      weighted += (h * t.b[i]) * (theta_t[i] * omega[i].to_mat());
    const RotMat f0_next = polar_project(eye + f0 * weighted);
    diff = std::max(diff, spectral_norm(f0_next.mat() - f0.mat()));
    f0 = f0_next;

    const StageGeometry geom(f0, factors, omega, t, h);
    std::vector<SkewMat> rhs;
    rhs.reserve(s);
    for (int i = 0; i < s; ++i) {
      const Mat theta_i = theta_t[i].transpose().mat();
      rhs.push_back((-t.b[i]) *
                    asym(theta_i * (lambda.to_mat() * omega[i].transpose().to_mat())));
    }
    const std::vector<SkewMat> sols = chain_solve(geom, rhs, cfg);

    const SkewMat lambda_rhs = -st.mu + h * apply_varphi_star(geom, sols);
    const SkewMat lambda_next = sylvester_rot(f0, lambda_rhs);
    diff = std::max(diff, (lambda_next - lambda).norm());
    lambda = lambda_next;

    for (int k = 0; k < s; ++k) {
      SkewMat mu_next = -asym(theta_t[k].transpose().mat() * lambda.to_mat()) +
                        (h / t.b[k]) * apply_psi_star(geom, sols, k);
      diff = std::max(diff, (mu_next - mu[k]).norm());
      mu[k] = std::move(mu_next);
    }

    used = iter + 1;
    if (diff < cfg.tol) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw NoConvergence("lie_poisson_step: fixed point did not converge", used, diff);

  Mat endpoint_arg = f0.transpose().mat();
  for (int i = 0; i < s; ++i)
    endpoint_arg += (h * t.b[i]) * (theta_t[i] * omega[i].to_mat());
  const SkewMat mu1 = asym(endpoint_arg * lambda.transpose().to_mat());

  StageCache cache{std::move(mu), std::move(omega), std::move(theta_t),
                   std::move(lambda), f0, std::move(factors), used};
  return {ReducedState{mu1}, std::move(cache)};
}

std::array<double, 6> vpd_residuals(const LeftTrivHamiltonian& sys,
                                    const ButcherTableau& t, double h,
                                    const CotangentState& before,
                                    const CotangentState& after,
                                    const StageCache& cache,
                                    const FixedPointConfig& cfg) {
  const int s = t.s;
  const RotMat& g0 = before.g;
  const RotMat& g1 = cache.end_rot;
  const std::vector<RotMat>& u = cache.stage_rots;

  const StageGeometry geom(g0.transpose(), cache.factors, cache.omegas, t, h);
  std::vector<SkewMat> rhs;
  rhs.reserve(s);
  for (int i = 0; i < s; ++i)
    rhs.push_back(t.b[i] * (sys.d_g(u[i], cache.mus[i]) -
                            multiplier_force(u[i], g1, cache.lambda, cache.omegas[i])));
  const std::vector<SkewMat> sols = chain_solve(geom, rhs, cfg);

  std::array<double, 6> r{};
  for (int k = 0; k < s; ++k) {
    const SkewMat expect =
        -asym(u[k].transpose() * (g1 * cache.lambda.to_mat())) +
        (h / t.b[k]) * apply_psi_star(geom, sols, k);
    r[0] = std::max(r[0], (cache.mus[k] - expect).norm());
  }

  Mat endpoint_arg = g0.mat();
  for (int i = 0; i < s; ++i)
    endpoint_arg += (h * t.b[i]) * (u[i] * cache.omegas[i].to_mat());
  r[1] = spectral_norm(polar_project(endpoint_arg).mat() - g1.mat());

  for (int i = 0; i < s; ++i) {
    Mat arg = g0.mat();
    for (int j = 0; j < s; ++j) {
      const double aij = t.at(i, j);
      if (aij == 0.0) continue;
      arg += (h * aij) * (u[j] * cache.omegas[j].to_mat());
    }
    r[2] = std::max(r[2], spectral_norm(polar_project(arg).mat() - u[i].mat()));
  }

  const SkewMat lhs4 = asym(g0.transpose() * (g1 * cache.lambda.to_mat()));
  const SkewMat rhs4 = -before.p + h * apply_varphi_star(geom, sols);
  r[3] = (lhs4 - rhs4).norm();

  const SkewMat p1 =
      asym(g1.transpose() * (endpoint_arg * cache.lambda.transpose().to_mat()));
  r[4] = (after.p - p1).norm();

  for (int i = 0; i < s; ++i)
    r[5] = std::max(r[5], (cache.omegas[i] - sys.d_mu(u[i], cache.mus[i])).norm());
  return r;
}

std::array<double, 6> lie_poisson_residuals(const ReducedHamiltonian& sys,
                                            const ButcherTableau& t, double h,
                                            const ReducedState& before,
                                            const ReducedState& after,
                                            const StageCache& cache,
                                            const FixedPointConfig& cfg) {
  const int s = t.s;
  const RotMat& f0 = cache.end_rot;
  const std::vector<RotMat>& theta_t = cache.stage_rots;

  const StageGeometry geom(f0, cache.factors, cache.omegas, t, h);
  std::vector<SkewMat> rhs;
  rhs.reserve(s);
  for (int i = 0; i < s; ++i)
    rhs.push_back((-t.b[i]) * asym(theta_t[i].transpose().mat() *
                                   (cache.lambda.to_mat() *
                                    cache.omegas[i].transpose().to_mat())));
  const std::vector<SkewMat> sols = chain_solve(geom, rhs, cfg);

  std::array<double, 6> r{};
  for (int k = 0; k < s; ++k) {
    const SkewMat expect = -asym(theta_t[k].transpose().mat() * cache.lambda.to_mat()) +
                           (h / t.b[k]) * apply_psi_star(geom, sols, k);
    r[0] = std::max(r[0], (cache.mus[k] - expect).norm());
  }

  Mat endpoint_arg = f0.transpose().mat();
  for (int i = 0; i < s; ++i)
    endpoint_arg += (h * t.b[i]) * (theta_t[i] * cache.omegas[i].to_mat());
  r[1] = asym(endpoint_arg).norm();  // the endpoint condition itself

  for (int i = 0; i < s; ++i) {
    Mat arg = f0.transpose().mat();
    for (int j = 0; j < s; ++j) {
      const double aij = t.at(i, j);
      if (aij == 0.0) continue;
      arg += (h * aij) * (theta_t[j] * cache.omegas[j].to_mat());
    }
    r[2] = std::max(r[2], spectral_norm(polar_project(arg).mat() - theta_t[i].mat()));
  }

  const SkewMat lhs4 = asym(f0 * cache.lambda.to_mat());
  const SkewMat rhs4 = -before.mu + h * apply_varphi_star(geom, sols);
  r[3] = (lhs4 - rhs4).norm();

  const SkewMat mu1 = asym(endpoint_arg * cache.lambda.transpose().to_mat());
  r[4] = (after.mu - mu1).norm();

  for (int i = 0; i < s; ++i)
    r[5] = std::max(r[5], (cache.omegas[i] - sys.d_mu(cache.mus[i])).norm());
  return r;
}

SkewMat legendre_convert(const RotMat& g, const Vec3& p_right) {
  if (g.dim() != 3)
    throw DimensionMismatch("legendre_convert: dimension is not 3");
  return hat(g.transpose().mat().apply3(p_right));
}

}  // namespace polarvi
