#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "polarvi/butcher.hpp"
#include "polarvi/fixed_point.hpp"
#include "polarvi/polar.hpp"
#include "polarvi/skew.hpp"
#include "polarvi/systems.hpp"
#include "polarvi/tangent_maps.hpp"

namespace polarvi {

/// Point on the left-trivialized cotangent bundle: attitude g and momentum
/// p in sk(n) under the Riesz identification.
struct CotangentState {
  RotMat g;
  SkewMat p;
};

/// Point on sk(n)* for the reduced dynamics.
struct ReducedState {
  SkewMat mu;
};

/// Everything solved inside one step, shared with observers: internal
/// momenta and velocities, stage rotations (U_i, or Theta_i^T in reduced
/// mode), the multiplier, the endpoint rotation (g_1 or f_0), and the polar
/// factors of the stage arguments.
struct StageCache {
  std::vector<SkewMat> mus;
  std::vector<SkewMat> omegas;
  std::vector<RotMat> stage_rots;
  SkewMat lambda;
  RotMat end_rot;
  std::vector<PolarFactors> factors;
  int iterations_used = 0;
};

/// One step of the variational polar decomposition method: solves the
/// coupled stage system for (mu_k, g_1, U_i, Lambda) by Gauss-Seidel
/// fixed-point sweeps, then evaluates the momentum update explicitly.
std::pair<CotangentState, StageCache> vpd_step(const LeftTrivHamiltonian& sys,
                                               const ButcherTableau& t, double h,
                                               const CotangentState& st,
                                               const FixedPointConfig& cfg);

/// One step of the reduced Lie-Poisson integrator for a group-invariant
/// Hamiltonian, iterating (mu_k, f_0, Theta_i, Lambda) in the variables
/// f_0 = g_0^T g_1 and Theta_i = U_i^T g_1.
std::pair<ReducedState, StageCache> lie_poisson_step(const ReducedHamiltonian& sys,
                                                     const ButcherTableau& t, double h,
                                                     const ReducedState& st,
                                                     const FixedPointConfig& cfg);

/// Independent residuals of the six stage equations at a converged step,
/// for diagnostics and tests. Order: momentum equations, endpoint
/// projection, stage projections, multiplier equation, momentum update,
/// velocity relation.
std::array<double, 6> vpd_residuals(const LeftTrivHamiltonian& sys,
                                    const ButcherTableau& t, double h,
                                    const CotangentState& before,
                                    const CotangentState& after,
                                    const StageCache& cache,
                                    const FixedPointConfig& cfg);

std::array<double, 6> lie_poisson_residuals(const ReducedHamiltonian& sys,
                                            const ButcherTableau& t, double h,
                                            const ReducedState& before,
                                            const ReducedState& after,
                                            const StageCache& cache,
                                            const FixedPointConfig& cfg);

/// Frame change from a right-trivialized momentum vector to the
/// left-trivialized skew momentum: hat(g^T p).
SkewMat legendre_convert(const RotMat& g, const Vec3& p_right);

/// Summary of a repeated application of a step map. Observers attached to
/// integrate() record whatever per-step observables a caller wants; the
/// trajectory itself keeps only the endpoint and iteration counters.
template <class State>
struct Trajectory {
  State final_state;
  long steps = 0;
  long total_iterations = 0;
  int max_iterations = 0;
};

/// Applies `step` repeatedly. The observer is called as
/// observe(k, state, cache) after each completed step, k counting from 1.
/// Step failures are rethrown with the failing step index prepended.
template <class State, class StepFn, class Observer>
Trajectory<State> integrate(StepFn&& step, State initial, long steps,
                            Observer&& observe) {
  if (steps < 0) throw ScenarioError("integrate: steps must be >= 0");
  Trajectory<State> out{std::move(initial), 0, 0, 0};
  for (long k = 0; k < steps; ++k) {
    try {
      auto [next, cache] = step(out.final_state);
      out.final_state = std::move(next);
      out.total_iterations += cache.iterations_used;
      out.max_iterations = std::max(out.max_iterations, cache.iterations_used);
      observe(k + 1, out.final_state, cache);
    } catch (const NoConvergence& e) {
      throw NoConvergence("integrate: step " + std::to_string(k + 1) + ": " + e.what(),
                          e.iterations, e.residual);
    } catch (const PoleSingularity& e) {
      throw PoleSingularity("integrate: step " + std::to_string(k + 1) + ": " + e.what());
    } catch (const Error& e) {
      throw Error("integrate: step " + std::to_string(k + 1) + ": " + e.what());
    }
    out.steps = k + 1;
  }
  return out;
}

template <class State, class StepFn>
Trajectory<State> integrate(StepFn&& step, State initial, long steps) {
  return integrate(std::forward<StepFn>(step), std::move(initial), steps,
                   [](long, const State&, const StageCache&) {});
}

}  // namespace polarvi
