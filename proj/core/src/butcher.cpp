#include "polarvi/butcher.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace polarvi {

namespace {

std::vector<double> parse_decimal_list(const std::string& csv, const char* what) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(cell, &pos));
      while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos])))
        ++pos;
      if (pos != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw ScenarioError(std::string(what) + ": bad decimal entry '" + cell + "'");
    }
  }
  if (out.empty()) throw ScenarioError(std::string(what) + ": empty list");
  return out;
}

std::string join_decimals(const std::vector<double>& v) {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", v[i]);
    if (i) out += ',';
    out += buf;
  }
  return out;
}

}  // namespace

void ButcherTableau::validate() const {
  if (s < 1 || a.size() != static_cast<std::size_t>(s) * s ||
      b.size() != static_cast<std::size_t>(s) || c.size() != static_cast<std::size_t>(s))
    throw DimensionMismatch("ButcherTableau: inconsistent sizes");
  double bs = 0.0;
  for (double w : b) bs += w;
  if (std::abs(bs - 1.0) > 1e-15)
    throw InvariantViolation("ButcherTableau: weights do not sum to 1");
  for (int i = 0; i < s; ++i) {
    double row = 0.0;
    for (int j = 0; j < s; ++j) row += at(i, j);
    if (std::abs(row - c[i]) > 1e-15)
      throw InvariantViolation("ButcherTableau: c_i != sum_j a_ij");
  }
}

ButcherTableau builtin_tableau(const std::string& name) {
  ButcherTableau t;
  t.name = name;
  if (name == "gl1") {
    t.s = 1;
    t.a = {0.5};
    t.b = {1.0};
    t.c = {0.5};
  } else if (name == "rk3") {
    t.s = 3;
    t.a = {0.0, 0.0, 0.0,  //
           0.5, 0.0, 0.0,  //
           -1.0, 2.0, 0.0};
    t.b = {1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0};
    t.c = {0.0, 0.5, 1.0};
  } else if (name == "gl2") {
    const double r = std::sqrt(3.0) / 6.0;
    t.s = 2;
    t.a = {0.25, 0.25 - r,  //
           0.25 + r, 0.25};
    t.b = {0.5, 0.5};
    t.c = {0.5 - r, 0.5 + r};
  } else if (name == "gl3") {
    const double r = std::sqrt(15.0);
    t.s = 3;
    t.a = {5.0 / 36.0, 2.0 / 9.0 - r / 15.0, 5.0 / 36.0 - r / 30.0,  //
           5.0 / 36.0 + r / 24.0, 2.0 / 9.0, 5.0 / 36.0 - r / 24.0,  //
           5.0 / 36.0 + r / 30.0, 2.0 / 9.0 + r / 15.0, 5.0 / 36.0};
    t.b = {5.0 / 18.0, 4.0 / 9.0, 5.0 / 18.0};
    t.c = {0.5 - r / 10.0, 0.5, 0.5 + r / 10.0};
  } else {
    throw ScenarioError("builtin_tableau: unknown name '" + name + "'");
  }
  t.validate();
  return t;
}

ButcherTableau sprk_partner(const ButcherTableau& t) {
  t.validate();
  ButcherTableau p;
  p.s = t.s;
  p.name = t.name + "~";
  p.b = t.b;
  p.a.assign(static_cast<std::size_t>(t.s) * t.s, 0.0);
  p.c.assign(t.s, 0.0);
  for (int i = 0; i < t.s; ++i) {
    if (t.b[i] == 0.0) throw ZeroWeight("sprk_partner: b_i = 0");
    for (int j = 0; j < t.s; ++j)
      p.a[static_cast<std::size_t>(i) * t.s + j] =
          t.b[j] * (1.0 - t.at(j, i) / t.b[i]);
  }
  for (int i = 0; i < t.s; ++i)
    for (int j = 0; j < t.s; ++j) p.c[i] += p.at(i, j);
  return p;
}

ButcherTableau tableau_from_strings(const std::string& a_csv,
                                    const std::string& b_csv,
                                    const std::string& c_csv) {
  ButcherTableau t;
  t.name = "custom";
  t.a = parse_decimal_list(a_csv, "tableau-a");
  t.b = parse_decimal_list(b_csv, "tableau-b");
  t.c = parse_decimal_list(c_csv, "tableau-c");
  t.s = static_cast<int>(t.b.size());
  t.validate();
  return t;
}

void tableau_to_strings(const ButcherTableau& t, std::string& a_csv,
                        std::string& b_csv, std::string& c_csv) {
  a_csv = join_decimals(t.a);
  b_csv = join_decimals(t.b);
  c_csv = join_decimals(t.c);
}

namespace {
double max_abs_diff(const std::vector<double>& x, const std::vector<double>& y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}
}  // namespace

std::pair<std::vector<double>, std::vector<double>> sprk_step(
    const ButcherTableau& t, const SprkSystem& sys,
    const std::vector<double>& q0, const std::vector<double>& p0, double h,
    const FixedPointConfig& cfg) {
  cfg.validate();
  const ButcherTableau ta = sprk_partner(t);
  const int s = t.s;
  const std::size_t d = q0.size();

  std::vector<std::vector<double>> qd(s, sys.velocity(q0, p0));
  std::vector<std::vector<double>> pd(s, sys.dL_dq(q0, qd[0]));

  std::vector<double> qi(d), pi(d);
  bool converged = false;
  double diff = 0.0;
  int used = 0;
  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    diff = 0.0;
    std::vector<std::vector<double>> qd_next(s), pd_next(s);
    for (int i = 0; i < s; ++i) {
      for (std::size_t k = 0; k < d; ++k) {
        double qs = q0[k], ps = p0[k];
        for (int j = 0; j < s; ++j) {
          qs += h * t.at(i, j) * qd[j][k];
          ps += h * ta.at(i, j) * pd[j][k];
        }
        qi[k] = qs;
        pi[k] = ps;
      }
      qd_next[i] = sys.velocity(qi, pi);
      pd_next[i] = sys.dL_dq(qi, qd_next[i]);
      diff = std::max(diff, max_abs_diff(qd_next[i], qd[i]));
      diff = std::max(diff, max_abs_diff(pd_next[i], pd[i]));
    }
    qd = std::move(qd_next);
    pd = std::move(pd_next);
    used = iter + 1;
    if (diff < cfg.tol) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw NoConvergence("sprk_step: fixed point did not converge", used, diff);

  std::vector<double> q1 = q0, p1 = p0;
  for (int i = 0; i < s; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      q1[k] += h * t.b[i] * qd[i][k];
      p1[k] += h * t.b[i] * pd[i][k];
    }
  return {q1, p1};
}

}  // namespace polarvi
