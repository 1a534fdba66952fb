// Command-line driver for the polar-decomposition variational integrators:
// trajectory runs, order studies against a cached reference, long-term
// energy/orthogonality drift experiments, and wall-clock benches. Prints a
// JSON summary to stdout; per-step records go to CSV via --out.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polarvi/harness.hpp"

namespace {

using nlohmann::json;
using namespace polarvi;

struct ScenarioFlags {
  Scenario sc;
  std::string scenario_file;

  void attach(CLI::App* cmd) {
    // --h is a spec'd flag; keep help on --help only so it cannot collide.
    cmd->set_help_flag("--help", "Print help and exit");
    cmd->add_option("--system", sc.system, "System: dipole | rigid-body");
    cmd->add_option("--method", sc.method, "Scheme: gl1 | rk3 | gl2 | gl3");
    cmd->add_flag("--reduced", sc.reduced, "Use the reduced Lie-Poisson integrator");
    cmd->add_option("--h", sc.h, "Step size");
    cmd->add_option("--steps", sc.steps, "Number of steps");
    cmd->add_option("--tol", sc.tol, "Fixed-point tolerance (default 1e-15)");
    cmd->add_option("--max-iter", sc.max_iter, "Fixed-point iteration cap (default 100)");
    cmd->add_option("--record-every", sc.record_every, "CSV row thinning factor");
    cmd->add_flag("--record-state", sc.record_state, "Record the state in CSV rows");
    cmd->add_option("--out", sc.out, "CSV output path");
    cmd->add_option("--scenario", scenario_file, "Scenario file (flat key = value)");
  }

  /// CLI flags override scenario-file values: file entries only fill in
  /// options the user did not pass.
  void resolve(const CLI::App* cmd) {
    if (scenario_file.empty()) return;
    static const std::vector<std::pair<std::string, std::string>> keys = {
        {"system", "--system"},           {"method", "--method"},
        {"reduced", "--reduced"},         {"h", "--h"},
        {"steps", "--steps"},             {"tol", "--tol"},
        {"max-iter", "--max-iter"},       {"record-every", "--record-every"},
        {"record-state", "--record-state"}, {"out", "--out"}};
    const auto kv = read_key_value_file(scenario_file);
    for (const auto& [key, value] : kv) {
      bool known = false;
      for (const auto& [file_key, flag] : keys) {
        if (key != file_key) continue;
        known = true;
        if (cmd->count(flag) == 0) scenario_apply(sc, key, value);
      }
      if (!known) scenario_apply(sc, key, value);  // throws with a clear message
    }
  }
};

json report_json(const ErrorReport& r) {
  return json{{"steps", r.steps},
              {"h", r.h},
              {"initial_energy", r.initial_energy},
              {"max_energy_err", r.max_energy_err},
              {"final_energy_err", r.final_energy_err},
              {"max_ortho_err", r.max_ortho_err},
              {"max_casimir_err", r.max_casimir_err},
              {"drift_slope", r.drift_slope},
              {"total_iterations", r.total_iterations},
              {"max_iterations", r.max_iterations},
              {"wall_seconds", r.wall_seconds}};
}

std::vector<double> parse_h_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    if (cell.empty()) continue;
    out.push_back(std::stod(cell));
  }
  if (out.empty()) throw ScenarioError("order-study: empty --h-list");
  return out;
}

std::string default_reference_path(const std::string& system) {
  return "reference_" + system + ".txt";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-order variational integrators on SO(n) built on the polar decomposition"};
  app.require_subcommand(1);

  ScenarioFlags sim_flags, drift_flags, bench_flags, order_flags, ref_flags;

  CLI::App* simulate = app.add_subcommand("simulate", "Integrate one scenario and report errors");
  sim_flags.attach(simulate);

  CLI::App* drift = app.add_subcommand(
      "energy-drift", "Long-term energy and orthogonality drift for one scenario");
  drift_flags.attach(drift);

  CLI::App* order = app.add_subcommand(
      "order-study", "Error versus step size against a cached reference endpoint");
  order_flags.attach(order);
  std::string h_list_text = "0.1,0.05,0.025,0.0125";
  double horizon = 0.5;
  std::string reference_path;
  std::string ref_method = "gl3";
  double ref_h = 0.001;
  int window_begin = 0, window_end = -1;
  order->add_option("--h-list", h_list_text, "Comma-separated step sizes");
  order->add_option("--T", horizon, "Integration horizon (default 0.5)");
  order->add_option("--reference", reference_path,
                    "Reference endpoint file (auto-generated when missing)");
  order->add_option("--ref-method", ref_method, "Reference scheme (default gl3)");
  order->add_option("--ref-h", ref_h, "Reference step size (default 0.001)");
  order->add_option("--window-begin", window_begin,
                    "First grid index included in the slope fit");
  order->add_option("--window-end", window_end,
                    "One past the last grid index in the slope fit (-1 = all)");

  CLI::App* bench_cmd = app.add_subcommand("bench", "Wall-clock timing of repeated runs");
  bench_flags.attach(bench_cmd);
  int repeats = 5;
  bench_cmd->add_option("--repeats", repeats, "Number of repetitions (default 5)");

  CLI::App* make_ref = app.add_subcommand("make-reference",
                                          "Generate and cache a reference endpoint");
  ref_flags.attach(make_ref);
  std::string mk_reference_path;
  std::string mk_method = "gl3";
  double mk_h = 0.001;
  double mk_horizon = 0.5;
  make_ref->add_option("--reference", mk_reference_path, "Output path");
  make_ref->add_option("--ref-method", mk_method, "Reference scheme (default gl3)");
  make_ref->add_option("--ref-h", mk_h, "Reference step size (default 0.001)");
  make_ref->add_option("--T", mk_horizon, "Integration horizon (default 0.5)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate || *drift) {
      ScenarioFlags& flags = *simulate ? sim_flags : drift_flags;
      CLI::App* cmd = *simulate ? simulate : drift;
      flags.resolve(cmd);
      flags.sc.validate();
      const ErrorReport report = run_energy_drift(flags.sc);
      json j = report_json(report);
      j["command"] = *simulate ? "simulate" : "energy-drift";
      j["system"] = flags.sc.system;
      j["method"] = flags.sc.method;
      j["reduced"] = flags.sc.reduced;
      if (!flags.sc.out.empty()) j["out"] = flags.sc.out;
      std::cout << j.dump(2) << "\n";
    } else if (*order) {
      order_flags.resolve(order);
      order_flags.sc.validate();
      const std::vector<double> h_list = parse_h_list(h_list_text);
      if (reference_path.empty())
        reference_path = default_reference_path(order_flags.sc.system);
      const ReferenceSolution ref =
          ensure_reference(order_flags.sc, ref_method, ref_h, horizon, reference_path);
      const OrderStudyResult result = run_order_study(
          order_flags.sc, h_list, horizon, ref, window_begin, window_end);
      json points = json::array();
      for (const OrderPoint& p : result.points)
        points.push_back(json{{"h", p.h},
                              {"steps", p.steps},
                              {"error", p.converged ? json(p.error) : json()},
                              {"converged", p.converged}});
      json j{{"command", "order-study"},
             {"system", order_flags.sc.system},
             {"method", order_flags.sc.method},
             {"T", horizon},
             {"points", points},
             {"slope", result.slope},
             {"window", {result.window_begin, result.window_end}},
             {"reference", {{"path", reference_path}, {"method", ref_method}, {"h", ref_h}}}};
      std::cout << j.dump(2) << "\n";
    } else if (*bench_cmd) {
      bench_flags.resolve(bench_cmd);
      bench_flags.sc.validate();
      const BenchResult result = bench(bench_flags.sc, repeats);
      json j{{"command", "bench"},
             {"system", bench_flags.sc.system},
             {"method", bench_flags.sc.method},
             {"reduced", bench_flags.sc.reduced},
             {"h", bench_flags.sc.h},
             {"steps", bench_flags.sc.steps},
             {"repeats", result.repeats},
             {"mean_seconds", result.mean_seconds},
             {"min_seconds", result.min_seconds},
             {"all_seconds", result.all_seconds}};
      std::cout << j.dump(2) << "\n";
    } else if (*make_ref) {
      ref_flags.resolve(make_ref);
      ref_flags.sc.validate();
      if (mk_reference_path.empty())
        mk_reference_path = default_reference_path(ref_flags.sc.system);
      const ReferenceSolution ref =
          make_reference(ref_flags.sc, mk_method, mk_h, mk_horizon);
      save_reference(ref, mk_reference_path);
      json j{{"command", "make-reference"},
             {"path", mk_reference_path},
             {"system", ref.system},
             {"method", ref.method},
             {"h", ref.h},
             {"T", ref.horizon}};
      std::cout << j.dump(2) << "\n";
    }
  } catch (const NoConvergence& e) {
    std::cerr << "error: " << e.what() << " (iterations=" << e.iterations
              << ", residual=" << e.residual << ")\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
