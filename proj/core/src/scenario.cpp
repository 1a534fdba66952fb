#include <cctype>
#include <fstream>
#include <sstream>

#include "polarvi/harness.hpp"

namespace polarvi {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ScenarioError("scenario: bad numeric value for '" + key + "': " + value);
  }
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ScenarioError("scenario: bad integer value for '" + key + "': " + value);
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ScenarioError("scenario: bad boolean value for '" + key + "': " + value);
}

std::vector<double> parse_double_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(parse_double(key, trim(cell)));
  if (out.empty()) throw ScenarioError("scenario: empty list for '" + key + "'");
  return out;
}

}  // namespace

void Scenario::validate() const {
  if (system != "dipole" && system != "rigid-body")
    throw ScenarioError("scenario: unknown system '" + system + "'");
  tableau_for(*this);  // throws on unknown method or bad custom coefficients
  if (!(h > 0.0)) throw ScenarioError("scenario: h must be positive");
  if (steps < 0) throw ScenarioError("scenario: steps must be >= 0");
  if (!(tol > 0.0)) throw ScenarioError("scenario: tol must be positive");
  if (max_iter < 1) throw ScenarioError("scenario: max-iter must be >= 1");
  if (record_every < 1) throw ScenarioError("scenario: record-every must be >= 1");
  if (reduced && system == "dipole")
    throw ScenarioError("scenario: the dipole system is not group-invariant; "
                        "no reduced form exists");
  if (inertia_diag.size() != 3)
    throw ScenarioError("scenario: inertia needs exactly three entries");
  for (double d : inertia_diag)
    if (!(d > 0.0)) throw ScenarioError("scenario: inertia entries must be positive");
}

ButcherTableau tableau_for(const Scenario& sc) {
  const bool any = !sc.tableau_a.empty() || !sc.tableau_b.empty() || !sc.tableau_c.empty();
  const bool all = !sc.tableau_a.empty() && !sc.tableau_b.empty() && !sc.tableau_c.empty();
  if (any && !all)
    throw ScenarioError("scenario: tableau-a, tableau-b, tableau-c must be "
                        "given together");
  if (all) return tableau_from_strings(sc.tableau_a, sc.tableau_b, sc.tableau_c);
  return builtin_tableau(sc.method);
}

void scenario_apply(Scenario& sc, const std::string& key, const std::string& value) {
  if (key == "system") sc.system = value;
  else if (key == "method") sc.method = value;
  else if (key == "reduced") sc.reduced = parse_bool(key, value);
  else if (key == "h") sc.h = parse_double(key, value);
  else if (key == "steps") sc.steps = parse_long(key, value);
  else if (key == "tol") sc.tol = parse_double(key, value);
  else if (key == "max-iter") sc.max_iter = static_cast<int>(parse_long(key, value));
  else if (key == "record-every") sc.record_every = parse_long(key, value);
  else if (key == "record-state") sc.record_state = parse_bool(key, value);
  else if (key == "out") sc.out = value;
  else if (key == "dipole-m") sc.dipole.m = parse_double(key, value);
  else if (key == "dipole-alpha") sc.dipole.alpha = parse_double(key, value);
  else if (key == "dipole-q") sc.dipole.q = parse_double(key, value);
  else if (key == "dipole-beta") sc.dipole.beta = parse_double(key, value);
  else if (key == "inertia") sc.inertia_diag = parse_double_list(key, value);
  else if (key == "mu0") {
    const std::vector<double> v = parse_double_list(key, value);
    if (v.size() != 3) throw ScenarioError("scenario: mu0 needs three entries");
    sc.mu0 = {v[0], v[1], v[2]};
  } else if (key == "tableau-a") sc.tableau_a = value;
  else if (key == "tableau-b") sc.tableau_b = value;
  else if (key == "tableau-c") sc.tableau_c = value;
  else throw ScenarioError("scenario: unknown key '" + key + "'");
}

std::map<std::string, std::string> read_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("scenario: cannot open '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ScenarioError("scenario: expected 'key = value' in '" + path + "': " + line);
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

Scenario scenario_from_file(const std::string& path) {
  Scenario sc;
  for (const auto& [key, value] : read_key_value_file(path))
    scenario_apply(sc, key, value);
  sc.validate();
  return sc;
}

}  // namespace polarvi
