#include "polarvi/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "polarvi/dense.hpp"

namespace polarvi {

namespace {

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Streaming least-squares accumulator for energy error versus step index.
struct DriftFit {
  double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  void add(double x, double y) {
    n += 1;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double slope() const {
    const double denom = n * sxx - sx * sx;
    return denom == 0.0 ? 0.0 : (n * sxy - sx * sy) / denom;
  }
};

double stage_ortho_error(const StageCache& cache) {
  double e = cache.end_rot.orthogonality_error();
  for (const RotMat& u : cache.stage_rots)
    e = std::max(e, u.orthogonality_error());
  return e;
}

long checked_step_count(double h, double horizon, const char* where) {
  const long steps = std::lround(horizon / h);
  if (steps < 1 || std::abs(static_cast<double>(steps) * h - horizon) > 1e-9 * horizon)
    throw ScenarioError(std::string(where) + ": h = " + fmt17(h) +
                        " does not divide the horizon evenly");
  return steps;
}

}  // namespace

Mat rigid_body_default_inertia() { return Mat::diag({3.0, 2.0, 1.0}); }

SkewMat rigid_body_default_momentum() { return hat({0.2, 0.3, 0.4}); }

LeftTrivHamiltonian hamiltonian_for(const Scenario& sc) {
  if (sc.system == "dipole") return dipole_hamiltonian(sc.dipole);
  if (sc.system == "rigid-body") return rigid_body_full(Mat::diag(sc.inertia_diag));
  throw ScenarioError("unknown system '" + sc.system + "'");
}

ReducedHamiltonian reduced_hamiltonian_for(const Scenario& sc) {
  if (sc.system == "rigid-body")
    return rigid_body_reduced(Mat::diag(sc.inertia_diag));
  throw ScenarioError("system '" + sc.system + "' has no reduced form");
}

CotangentState initial_state_for(const Scenario& sc) {
  if (sc.system == "dipole")
    return {dipole_initial_attitude(), dipole_initial_momentum(sc.dipole)};
  if (sc.system == "rigid-body") return {RotMat::identity(3), hat(sc.mu0)};
  throw ScenarioError("unknown system '" + sc.system + "'");
}

ReducedState reduced_initial_state_for(const Scenario& sc) {
  if (sc.system == "rigid-body") return {hat(sc.mu0)};
  throw ScenarioError("system '" + sc.system + "' has no reduced form");
}

ErrorReport run_energy_drift(const Scenario& sc) {
  sc.validate();
  const ButcherTableau t = tableau_for(sc);
  const FixedPointConfig cfg = sc.fixed_point();

  ErrorReport report;
  report.h = sc.h;
  DriftFit fit;
  const auto t0 = std::chrono::steady_clock::now();

  if (!sc.reduced) {
    const LeftTrivHamiltonian sys = hamiltonian_for(sc);
    const CotangentState start = initial_state_for(sc);
    report.initial_energy = sys.energy(start.g, start.p);

    auto observe = [&](long k, const CotangentState& state, const StageCache& cache) {
      const double e_err = std::abs(sys.energy(state.g, state.p) - report.initial_energy);
      const double o_err =
          std::max(state.g.orthogonality_error(), stage_ortho_error(cache));
      report.max_energy_err = std::max(report.max_energy_err, e_err);
      report.max_ortho_err = std::max(report.max_ortho_err, o_err);
      report.final_energy_err = e_err;
      fit.add(static_cast<double>(k), e_err);
      if (k % sc.record_every == 0 || k == sc.steps) {
        ErrorRecord rec{k, k * sc.h, e_err, o_err, sc.record_state, {}};
        if (sc.record_state) {
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) rec.state.push_back(state.g(i, j));
          const Vec3 p = vee(state.p);
          rec.state.insert(rec.state.end(), p.begin(), p.end());
        }
        report.records.push_back(std::move(rec));
      }
    };
    const auto traj = integrate(
        [&](const CotangentState& s) { return vpd_step(sys, t, sc.h, s, cfg); },
        start, sc.steps, observe);
    report.steps = traj.steps;
    report.total_iterations = traj.total_iterations;
    report.max_iterations = traj.max_iterations;
  } else {
    const ReducedHamiltonian sys = reduced_hamiltonian_for(sc);
    const ReducedState start = reduced_initial_state_for(sc);
    report.initial_energy = sys.energy(start.mu);
    const double casimir0 = start.mu.norm();

    auto observe = [&](long k, const ReducedState& state, const StageCache& cache) {
      const double e_err = std::abs(sys.energy(state.mu) - report.initial_energy);
      const double o_err = stage_ortho_error(cache);
      report.max_energy_err = std::max(report.max_energy_err, e_err);
      report.max_ortho_err = std::max(report.max_ortho_err, o_err);
      report.max_casimir_err =
          std::max(report.max_casimir_err, std::abs(state.mu.norm() - casimir0));
      report.final_energy_err = e_err;
      fit.add(static_cast<double>(k), e_err);
      if (k % sc.record_every == 0 || k == sc.steps) {
        ErrorRecord rec{k, k * sc.h, e_err, o_err, sc.record_state, {}};
        if (sc.record_state) {
          const Vec3 p = vee(state.mu);
          rec.state.insert(rec.state.end(), p.begin(), p.end());
        }
        report.records.push_back(std::move(rec));
      }
    };
    const auto traj = integrate(
        [&](const ReducedState& s) { return lie_poisson_step(sys, t, sc.h, s, cfg); },
        start, sc.steps, observe);
    report.steps = traj.steps;
    report.total_iterations = traj.total_iterations;
    report.max_iterations = traj.max_iterations;
  }

  report.drift_slope = fit.slope();
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!sc.out.empty()) write_csv(report, sc.out);
  return report;
}

void write_csv(const ErrorReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ScenarioError("write_csv: cannot open '" + path + "'");
  const bool with_state = !report.records.empty() && report.records.front().has_state;
  const std::size_t state_len =
      with_state ? report.records.front().state.size() : 0;
  out << "step,t,energy_err,ortho_err";
  if (with_state) {
    if (state_len == 12) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out << ",g" << i << j;
    }
    out << ",p0,p1,p2";
  }
  out << "\n";
  for (const ErrorRecord& r : report.records) {
    out << r.step << ',' << fmt17(r.t) << ',' << fmt17(r.energy_err) << ','
        << fmt17(r.ortho_err);
    for (double v : r.state) out << ',' << fmt17(v);
    out << "\n";
  }
}

ErrorReport read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("read_csv: cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw ScenarioError("read_csv: empty file");
  ErrorReport report;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(std::stod(cell));
    if (cells.size() < 4) throw ScenarioError("read_csv: short row");
    ErrorRecord rec;
    rec.step = static_cast<long>(cells[0]);
    rec.t = cells[1];
    rec.energy_err = cells[2];
    rec.ortho_err = cells[3];
    rec.has_state = cells.size() > 4;
    rec.state.assign(cells.begin() + 4, cells.end());
    report.records.push_back(std::move(rec));
  }
  report.steps = report.records.empty() ? 0 : report.records.back().step;
  return report;
}

double trajectory_error(const CotangentState& a, const CotangentState& b) {
  if (a.g.dim() != b.g.dim())
    throw DimensionMismatch("trajectory_error: dimension mismatch");
  const Vec3 pa = vee(a.p), pb = vee(b.p);
  return norm(pa - pb) + spectral_norm(a.g.mat() - b.g.mat());
}

ReferenceSolution make_reference(const Scenario& base, const std::string& ref_method,
                                 double ref_h, double horizon) {
  Scenario sc = base;
  sc.method = ref_method;
  sc.h = ref_h;
  sc.reduced = false;
  sc.tableau_a.clear();
  sc.tableau_b.clear();
  sc.tableau_c.clear();
  sc.validate();
  const long steps = checked_step_count(ref_h, horizon, "make_reference");
  const ButcherTableau t = builtin_tableau(ref_method);
  const LeftTrivHamiltonian sys = hamiltonian_for(sc);
  const FixedPointConfig cfg = sc.fixed_point();
  const auto traj = integrate(
      [&](const CotangentState& s) { return vpd_step(sys, t, ref_h, s, cfg); },
      initial_state_for(sc), steps);
  return {sc.system, ref_method, ref_h, horizon, traj.final_state};
}

void save_reference(const ReferenceSolution& ref, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ScenarioError("save_reference: cannot open '" + path + "'");
  out << "# polarvi reference endpoint\n";
  out << "system = " << ref.system << "\n";
  out << "method = " << ref.method << "\n";
  out << "h = " << fmt17(ref.h) << "\n";
  out << "horizon = " << fmt17(ref.horizon) << "\n";
  out << "g =";
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out << ' ' << fmt17(ref.state.g(i, j));
  out << "\n";
  const Vec3 p = vee(ref.state.p);
  out << "p = " << fmt17(p[0]) << ' ' << fmt17(p[1]) << ' ' << fmt17(p[2]) << "\n";
}

ReferenceSolution load_reference(const std::string& path) {
  const auto kv = read_key_value_file(path);
  const auto need = [&kv, &path](const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end())
      throw ScenarioError("load_reference: missing '" + key + "' in " + path);
    return it->second;
  };
  ReferenceSolution ref;
  ref.system = need("system");
  ref.method = need("method");
  ref.h = std::stod(need("h"));
  ref.horizon = std::stod(need("horizon"));
  {
    std::stringstream ss(need("g"));
    Mat g(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (!(ss >> g(i, j))) throw ScenarioError("load_reference: bad g entries");
    ref.state.g = RotMat(g);
  }
  {
    std::stringstream ss(need("p"));
    Vec3 p{};
    for (double& v : p)
      if (!(ss >> v)) throw ScenarioError("load_reference: bad p entries");
    ref.state.p = hat(p);
  }
  return ref;
}

ReferenceSolution ensure_reference(const Scenario& base, const std::string& ref_method,
                                   double ref_h, double horizon,
                                   const std::string& path) {
  {
    std::ifstream probe(path);
    if (probe.good()) {
      const ReferenceSolution ref = load_reference(path);
      if (ref.system == base.system && ref.method == ref_method &&
          std::abs(ref.h - ref_h) <= 1e-15 && std::abs(ref.horizon - horizon) <= 1e-15)
        return ref;
    }
  }
  const ReferenceSolution ref = make_reference(base, ref_method, ref_h, horizon);
  save_reference(ref, path);
  return ref;
}

OrderStudyResult run_order_study(const Scenario& base, const std::vector<double>& h_list,
                                 double horizon, const ReferenceSolution& ref,
                                 int window_begin, int window_end) {
  if (base.reduced)
    throw ScenarioError("order-study: only the full cotangent integrator is compared");
  if (base.system != ref.system)
    throw ScenarioError("order-study: reference was computed for system '" +
                        ref.system + "'");
  const ButcherTableau t = tableau_for(base);
  const LeftTrivHamiltonian sys = hamiltonian_for(base);
  const FixedPointConfig cfg = base.fixed_point();
  const CotangentState start = initial_state_for(base);

  OrderStudyResult result;
  for (double h : h_list) {
    OrderPoint point;
    point.h = h;
    point.steps = checked_step_count(h, horizon, "order-study");
    try {
      const auto traj = integrate(
          [&](const CotangentState& s) { return vpd_step(sys, t, h, s, cfg); },
          start, point.steps);
      point.error = trajectory_error(traj.final_state, ref.state);
    } catch (const NoConvergence&) {
      point.converged = false;
      point.error = std::numeric_limits<double>::quiet_NaN();
    }
    result.points.push_back(point);
  }

  if (window_end < 0 || window_end > static_cast<int>(result.points.size()))
    window_end = static_cast<int>(result.points.size());
  window_begin = std::max(window_begin, 0);
  result.window_begin = window_begin;
  result.window_end = window_end;

  DriftFit fit;
  for (int i = window_begin; i < window_end; ++i) {
    const OrderPoint& p = result.points[i];
    if (p.converged && p.error > 0.0) fit.add(std::log(p.h), std::log(p.error));
  }
  result.slope = fit.slope();
  return result;
}

BenchResult bench(const Scenario& sc, int repeats) {
  if (repeats < 1) throw ScenarioError("bench: repeats must be >= 1");
  sc.validate();
  const ButcherTableau t = tableau_for(sc);
  const FixedPointConfig cfg = sc.fixed_point();

  BenchResult result;
  result.repeats = repeats;
  result.min_seconds = std::numeric_limits<double>::infinity();
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    if (!sc.reduced) {
      const LeftTrivHamiltonian sys = hamiltonian_for(sc);
      integrate([&](const CotangentState& s) { return vpd_step(sys, t, sc.h, s, cfg); },
                initial_state_for(sc), sc.steps);
    } else {
      const ReducedHamiltonian sys = reduced_hamiltonian_for(sc);
      integrate(
          [&](const ReducedState& s) { return lie_poisson_step(sys, t, sc.h, s, cfg); },
          reduced_initial_state_for(sc), sc.steps);
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    result.all_seconds.push_back(secs);
    result.mean_seconds += secs;
    result.min_seconds = std::min(result.min_seconds, secs);
  }
  result.mean_seconds /= repeats;
  return result;
}

}  // namespace polarvi
