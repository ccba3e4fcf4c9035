// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "evtcvar/asymptotics.hpp"
#include "evtcvar/distributions.hpp"
#include "evtcvar/estimators.hpp"
#include "evtcvar/io.hpp"
#include "evtcvar/mc_harness.hpp"
#include "evtcvar/parallel.hpp"
#include "evtcvar/process_lab.hpp"
#include "evtcvar/second_order.hpp"

using namespace evtcvar;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const SweepRow* find_row(const SweepResult& r, double gamma) {
  for (const auto& row : r.rows)
    if (std::abs(row.gamma - gamma) < 1e-12) return &row;
  return nullptr;
}

// Paper protocol sweeps shared by criteria 1 and 2.
struct Protocol {
  SweepResult gev, gpd;
  double seconds = 0;
};

const Protocol& protocol() {
  static const Protocol p = [] {
    Protocol out;
    SweepConfig c;
    c.gamma_grid = default_gamma_grid();
    c.n = 10000;
    c.m = 100;
    c.reps = 10000;
    const auto t0 = std::chrono::steady_clock::now();
    c.family = Family::gev;
    out.gev = run_sweep(c);
    c.family = Family::gpd;
    out.gpd = run_sweep(c);
    out.seconds = seconds_since(t0);
    return out;
  }();
  return p;
}

Verdict criterion1() {
  const Protocol& p = protocol();
  Verdict v;
  double lo = INFINITY, hi = -INFINITY;
  for (const SweepResult* r : {&p.gev, &p.gpd})
    for (const auto& row : r->rows) {
      if (row.gamma > 0.2 + 1e-12) continue;
      lo = std::min(lo, row.ratio_asym);
      hi = std::max(hi, row.ratio_asym);
      if (!(row.ratio_asym >= 0.10 && row.ratio_asym <= 0.50)) v.pass = false;
    }
  if (p.seconds > 15 * 60) v.pass = false;
  v.detail = "ratio_asym over gamma in [-1, 0.2] spans [" + fmt("%.4f", lo) + ", " + fmt("%.4f", hi) +
             "] for gev and gpd; runtime " + fmt("%.1f", p.seconds) + " s with " +
             std::to_string(resolve_workers()) + " worker(s)";
  return v;
}

Verdict criterion2() {
  const Protocol& p = protocol();
  Verdict v;
  double worst = 0;
  std::string worst_at;
  for (const auto& [name, r] : std::vector<std::pair<std::string, const SweepResult*>>{{"gev", &p.gev}, {"gpd", &p.gpd}}) {
    for (double g : {-1.0, -0.75, -0.5, -0.25, 0.0, 0.1, 0.2}) {
      const SweepRow* row = find_row(*r, g);
      if (!row) {
        v.pass = false;
        continue;
      }
      const double gap = std::abs(row->ratio_asym - row->ratio_sim) / row->ratio_asym;
      if (gap > worst) {
        worst = gap;
        worst_at = name + " gamma=" + fmt("%g", g);
      }
      if (!(gap <= 0.15)) v.pass = false;
    }
    const SweepRow* top = find_row(*r, 0.45);
    if (!top || !(top->ratio_asym > top->ratio_sim)) v.pass = false;
    if (top)
      v.detail += name + " at 0.45: asym " + fmt("%.4f", top->ratio_asym) + " sim " + fmt("%.4f", top->ratio_sim) + "; ";
  }
  v.detail += "max relative gap " + fmt("%.4f", worst) + " (" + worst_at + ")";
  return v;
}

Verdict criterion3() {
  Verdict v;
  SweepConfig c;
  c.family = Family::gpd;
  c.gamma_grid = {-1.0, -0.5, 0.0, 0.25};
  c.n = 100000;
  c.m = 1000;
  c.reps = 20000;
  const SweepResult r = run_sweep(c);
  for (const auto& row : r.rows) {
    const double gap = std::abs(row.var_sim_cvar - row.av_cvar) / row.av_cvar;
    if (!(gap <= 0.10)) v.pass = false;
    v.detail += "gamma=" + fmt("%g", row.gamma) + " sim " + fmt("%.4f", row.var_sim_cvar) + " vs " +
                fmt("%.4f", row.av_cvar) + " (" + fmt("%.1f", 100 * gap) + "%); ";
  }
  return v;
}

Verdict criterion4() {
  Verdict v;
  const ProcessGrid grid({0.5, 1.0, 2.0, 4.0});
  double worst_emp = 0, worst_lim = 0;
  for (double gamma : {-1.0, 0.0, 0.25}) {
    const ShapeParams g{gamma};
    const Eigen::MatrixXd k = kernel_cov(grid, g);
    const Eigen::MatrixXd emp =
        empirical_cov(empirical_tilde_B(TailModel{Family::gpd, gamma}, 100000, 100, grid, 2000, 20240601));
    const Eigen::MatrixXd lim = empirical_cov(simulate_limit_process(g, grid, 100000, 10000, 20240601));
    for (Eigen::Index i = 0; i < k.rows(); ++i)
      for (Eigen::Index j = i; j < k.cols(); ++j) {
        worst_emp = std::max(worst_emp, std::abs(emp(i, j) - k(i, j)) / std::abs(k(i, j)));
        worst_lim = std::max(worst_lim, std::abs(lim(i, j) - k(i, j)) / std::abs(k(i, j)));
      }
  }
  v.pass = worst_emp <= 0.15 && worst_lim <= 0.05;
  v.detail = "max relative error: empirical " + fmt("%.4f", worst_emp) + " (limit 0.15), simulated limit " +
             fmt("%.4f", worst_lim) + " (limit 0.05)";
  return v;
}

Verdict criterion5() {
  Verdict v;
  double worst = 0;
  int points = 0;
  for (double gamma : {-1.0, -0.5, 0.0, 0.25, 0.49})
    for (double t : {0.01, 0.1, 0.5, 1.0, 2.0, 3.3, 10.0, 50.0, 100.0, 1000.0}) {
      const double want = gamma == 0.0
                              ? 2.0 / t
                              : 2.0 / ((1.0 - gamma) * (1.0 - 2.0 * gamma)) * std::pow(t, -2.0 * gamma - 1.0);
      worst = std::max(worst, std::abs(cov_kernel(t, t, ShapeParams{gamma}) - want) / want);
      ++points;
    }
  v.pass = worst <= 1e-12 && points == 50;
  v.detail = std::to_string(points) + " points, max relative error " + fmt("%.3g", worst);
  return v;
}

Verdict criterion6() {
  Verdict v;
  double worst = 0;
  for (double gamma : {-1.0, -0.5, 0.0, 0.25, 0.49}) {
    const TailModel gpd{Family::gpd, gamma};
    for (double t : {10.0, 100.0, 1000.0})
      for (double y : {0.25, 0.5, 2.0, 4.0}) worst = std::max(worst, std::abs(remainder_R(t, y, gpd)));
  }
  v.pass = worst <= 1e-12;
  v.detail = "max |R(t, y)| = " + fmt("%.3g", worst);
  return v;
}

Verdict criterion7() {
  Verdict v;
  double worst = 0;
  const std::size_t n = 4000, m = 100;
  const SpacingSpec spec{2.0, 2.0, m};
  for (double g0 : {-1.0, -0.5, 0.25}) {
    std::vector<double> x(n);
    for (std::size_t i = 1; i <= n; ++i) x[i - 1] = (std::pow(double(i), -g0) - 1.0) / g0;
    const TailModel model{Family::gpd, g0};
    std::vector<double> y(4 * m);
    for (std::size_t k = 1; k <= y.size(); ++k) y[k - 1] = model.cvar_curve_V(double(k) / double(n));
    for (double est : {pickands_estimate(x, m), yun_estimate(x, spec),
                       cvar_pickands_estimate(CvarOrderView{y, n}, spec)})
      worst = std::max(worst, std::abs(est - g0));
  }
  v.pass = worst <= 1e-10;
  v.detail = "max |gamma_hat - gamma0| = " + fmt("%.3g", worst);
  return v;
}

Verdict criterion8() {
  Verdict v;
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const double gamma = -1.0 + 1.45 * unit(gen);
    const Family family = trial % 2 ? Family::gev : Family::gpd;
    const std::size_t n = 400 + std::size_t(1600 * unit(gen));
    const std::size_t m = 5 + std::size_t(double(n / 4 - 5) * unit(gen));
    const double a = std::exp(std::log(0.2) + std::log(25.0) * unit(gen));
    const double b = -10.0 + 20.0 * unit(gen);
    const auto x = sample(TailModel{family, gamma}, n, gen()).values;
    std::vector<double> y(n);
    std::transform(x.begin(), x.end(), y.begin(), [=](double s) { return a * s + b; });
    const SpacingSpec spec{2.0, 2.0, m};
    try {
      worst = std::max(worst, std::abs(pickands_estimate(y, m) - pickands_estimate(x, m)));
      worst = std::max(worst, std::abs(yun_estimate(y, spec) - yun_estimate(x, spec)));
      worst = std::max(worst, std::abs(cvar_pickands_estimate(y, spec) - cvar_pickands_estimate(x, spec)));
    } catch (const DegenerateSampleError&) {
      v.pass = false;
    }
  }
  if (!(worst <= 1e-12)) v.pass = false;
  v.detail = "1000 random (a, b, sample) triples, a in [0.2, 5], b in [-10, 10]; max difference " + fmt("%.3g", worst);
  return v;
}

template <class F>
double gk(F f, double a, double b) {
  if (a == b) return 0.0;
  if (a > b) return -gk(f, b, a);
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 8, 1e-12);
}

Verdict criterion9() {
  Verdict v;
  double worst_h = 0;
  for (double gamma : {-1.0, -0.5, 0.0, 0.25, 0.49})
    for (double rho : {0.0, -0.5, -1.0, -2.0})
      for (double y : {0.1, 0.5, 2.0, 5.0})
        for (auto [c1, c2] : std::vector<std::pair<double, double>>{{1, 0}, {0, 1}, {1, 1}}) {
          auto inner = [rho](double s) { return gk([rho](double w) { return std::pow(w, -rho - 1); }, s, 1.0); };
          auto f = [&](double s) {
            return c1 * std::pow(s, -gamma - 1) * inner(s) + c2 * std::pow(s, -(rho + gamma) - 1);
          };
          const double want = gk(f, y, 1.0);
          const double got = big_H(y, ShapeParams{gamma}, SecondOrderSpec{rho, c1, c2, {}});
          worst_h = std::max(worst_h, std::abs(got - want) / std::abs(want));
        }

  double worst_lin = 0;
  for (double gamma : {-1.0, -0.5, 0.0, 0.25, 0.45})
    for (double rho : {0.0, -0.5, -1.0, -2.0}) {
      const SpacingSpec spec{2.0, 2.0, 100};
      const ShapeParams g{gamma};
      const double b10 = bias_b(spec, g, SecondOrderSpec{rho, 1, 0, {}});
      const double b01 = bias_b(spec, g, SecondOrderSpec{rho, 0, 1, {}});
      for (auto [c1, c2] : std::vector<std::pair<double, double>>{{2.5, -1.5}, {-0.3, 4.0}, {1, 1}}) {
        const double lin = c1 * b10 + c2 * b01;
        const double b = bias_b(spec, g, SecondOrderSpec{rho, c1, c2, {}});
        worst_lin = std::max(worst_lin, std::abs(b - lin) / std::max(1.0, std::abs(lin)));
      }
    }

  SecondOrderSpec s{-1.0, 0.0, 0.0, {1.0, -1.0}};
  bool arith = condition2_statistic(100, 10000, s) == 0.1;
  s.rate = {0.0, -1.0};
  arith = arith && condition2_statistic(100, 10000, s) == 0.0;
  s.rate = {1.0, -0.5};
  arith = arith && condition2_statistic(400, 10000, s) == 4.0;

  v.pass = worst_h <= 1e-8 && worst_lin <= 1e-10 && arith;
  v.detail = "big_H max relative error " + fmt("%.3g", worst_h) + "; bias_b linearity " + fmt("%.3g", worst_lin) +
             "; condition2 cases " + (arith ? "exact" : "inexact");
  return v;
}

Verdict criterion10() {
  Verdict v;
  SweepConfig c;
  c.gamma_grid = default_gamma_grid();
  c.family = Family::gev;
  c.reps = 1000;
  auto csv = [&](unsigned workers) {
    c.workers = workers;
    std::ostringstream out;
    io::write_sweep_csv(out, run_sweep(c).rows);
    return out.str();
  };
  const std::string a = csv(1), b = csv(1), d = csv(8);
  v.pass = a == b && a == d;
  v.detail = std::string("two runs ") + (a == b ? "identical" : "differ") + ", workers 1 vs 8 " +
             (a == d ? "identical" : "differ") + " (" + std::to_string(a.size()) + " bytes)";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"ratio range", criterion1},          {"asymptotic vs simulated ratio", criterion2},
      {"variance vs Monte Carlo", criterion3}, {"process covariance", criterion4},
      {"diagonal identity", criterion5},    {"GPD first-order exactness", criterion6},
      {"exact recovery", criterion7},       {"location-scale invariance", criterion8},
      {"second-order checks", criterion9},  {"determinism", criterion10}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::printf("criterion %zu (%s): %s: %s [%.1f s]\n", i + 1, criteria[i].first, v.pass ? "PASS" : "FAIL",
                v.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
