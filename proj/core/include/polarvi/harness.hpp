#pragma once

#include <map>
#include <string>
#include <vector>

#include "polarvi/integrators.hpp"
#include "polarvi/systems.hpp"

namespace polarvi {

/// One experiment: which system, which scheme, and the run parameters.
/// Mirrors the CLI flags one to one; scenario files are flat key = value
/// text with the same keys.
struct Scenario {
  std::string system = "dipole";  // dipole | rigid-body
  std::string method = "gl2";     // gl1 | rk3 | gl2 | gl3
  bool reduced = false;
  double h = 0.01;
  long steps = 10000;
  double tol = 1e-15;
  int max_iter = 100;
  long record_every = 1;
  bool record_state = false;
  std::string out;  // CSV output path; empty writes no file

  // System parameters (scenario-file keys dipole-m, dipole-alpha, dipole-q,
  // dipole-beta, inertia, mu0); defaults are the benchmark constants.
  DipoleParams dipole;
  std::vector<double> inertia_diag{3.0, 2.0, 1.0};
  Vec3 mu0{0.2, 0.3, 0.4};

  // Custom tableau as comma-separated decimal strings (keys tableau-a,
  // tableau-b, tableau-c); when set, all three override `method`.
  std::string tableau_a, tableau_b, tableau_c;

  void validate() const;
  FixedPointConfig fixed_point() const { return FixedPointConfig{tol, max_iter}; }
};

/// The scheme a scenario asks for: the custom tableau when one is spelled
/// out, otherwise the named built-in.
ButcherTableau tableau_for(const Scenario& sc);

/// Applies one key/value pair; throws ScenarioError on unknown keys or
/// unparsable values.
void scenario_apply(Scenario& sc, const std::string& key, const std::string& value);
Scenario scenario_from_file(const std::string& path);
std::map<std::string, std::string> read_key_value_file(const std::string& path);

/// Default systems behind the scenario names.
LeftTrivHamiltonian hamiltonian_for(const Scenario& sc);
ReducedHamiltonian reduced_hamiltonian_for(const Scenario& sc);
CotangentState initial_state_for(const Scenario& sc);
ReducedState reduced_initial_state_for(const Scenario& sc);

/// Inertia and momentum used for rigid-body scenarios.
Mat rigid_body_default_inertia();
SkewMat rigid_body_default_momentum();

struct ErrorRecord {
  long step = 0;
  double t = 0.0;
  double energy_err = 0.0;
  double ortho_err = 0.0;
  bool has_state = false;
  std::vector<double> state;  // g row-major then vee(p), or vee(mu) alone
};

/// Per-run error report: sampled records plus streaming summary statistics
/// over every step (records are thinned by record_every, the maxima are not).
struct ErrorReport {
  std::vector<ErrorRecord> records;
  long steps = 0;
  double h = 0.0;
  double initial_energy = 0.0;
  double max_energy_err = 0.0;
  double final_energy_err = 0.0;
  double max_ortho_err = 0.0;
  double max_casimir_err = 0.0;  // reduced runs only
  double drift_slope = 0.0;      // least-squares energy error per step
  long total_iterations = 0;
  int max_iterations = 0;
  double wall_seconds = 0.0;
};

void write_csv(const ErrorReport& report, const std::string& path);
/// Reads back the value columns of a report CSV (records only).
ErrorReport read_csv(const std::string& path);

/// Runs a scenario recording energy and orthogonality errors; the summary
/// tracks every step, rows land in the report each record_every steps.
ErrorReport run_energy_drift(const Scenario& sc);

/// The §-style trajectory distance: Euclidean distance of the momentum
/// vectors plus spectral distance of the attitudes.
double trajectory_error(const CotangentState& a, const CotangentState& b);

/// Reference endpoint for order studies, cached on disk as text keyed by
/// system, horizon, method, and step size.
struct ReferenceSolution {
  std::string system;
  std::string method;
  double h = 0.0;
  double horizon = 0.0;
  CotangentState state;
};

ReferenceSolution make_reference(const Scenario& base, const std::string& ref_method,
                                 double ref_h, double horizon);
void save_reference(const ReferenceSolution& ref, const std::string& path);
ReferenceSolution load_reference(const std::string& path);
/// Loads the cached reference when present and matching; otherwise generates
/// and caches it.
ReferenceSolution ensure_reference(const Scenario& base, const std::string& ref_method,
                                   double ref_h, double horizon,
                                   const std::string& path);

struct OrderPoint {
  double h = 0.0;
  long steps = 0;
  double error = 0.0;
  bool converged = true;
};

struct OrderStudyResult {
  std::vector<OrderPoint> points;
  double slope = 0.0;   // least-squares log-log slope over the window
  int window_begin = 0; // indices into points included in the fit
  int window_end = 0;   // one past the last
};

/// Integrates the scenario's method over the horizon for every h in h_list
/// and reports the trajectory error against the reference, plus the fitted
/// slope over [window_begin, window_end) (whole list when the window is
/// empty). Non-converged grid points are recorded and excluded from the fit.
OrderStudyResult run_order_study(const Scenario& base, const std::vector<double>& h_list,
                                 double horizon, const ReferenceSolution& ref,
                                 int window_begin = 0, int window_end = -1);

struct BenchResult {
  int repeats = 0;
  double mean_seconds = 0.0;
  double min_seconds = 0.0;
  std::vector<double> all_seconds;
};

/// Wall-clock timing of repeated full integrations on the monotonic clock.
BenchResult bench(const Scenario& sc, int repeats);

}  // namespace polarvi
