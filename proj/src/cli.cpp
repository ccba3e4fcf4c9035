#include "evtcvar/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "evtcvar/asymptotics.hpp"
#include "evtcvar/config.hpp"
#include "evtcvar/distributions.hpp"
#include "evtcvar/errors.hpp"
#include "evtcvar/estimators.hpp"
#include "evtcvar/io.hpp"
#include "evtcvar/mc_harness.hpp"
#include "evtcvar/normal.hpp"
#include "evtcvar/process_lab.hpp"
#include "evtcvar/random.hpp"
#include "evtcvar/second_order.hpp"
#include "evtcvar/svg_plot.hpp"

namespace evtcvar::cli {

using json = nlohmann::json;

namespace {

// Options that may also come from a JSON config file. Flags given on the
// command line take precedence over the file.
class ConfigBindings {
 public:
  template <class T>
  CLI::Option* add(CLI::App* app, const std::string& flag, T& target, const std::string& help) {
    CLI::Option* opt;
    if constexpr (std::is_same_v<T, bool>)
      opt = app->add_flag("--" + flag, target, help);
    else
      opt = app->add_option("--" + flag, target, help);
    if constexpr (!std::is_same_v<T, std::optional<double>>) opt->capture_default_str();
    bindings_.push_back({flag, opt, [&target](const json& j) { assign(target, j); },
                         [&target]() { return to_json(target); }});
    return opt;
  }

  void apply_file(const std::string& path) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) detail::raise<ConfigError>("config", "cannot open '" + path + "'");
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      detail::raise<ConfigError>("config", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) detail::raise<ConfigError>("config", "top level must be an object");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      auto b = std::find_if(bindings_.begin(), bindings_.end(), [&](const Binding& x) { return x.key == it.key(); });
      if (b == bindings_.end()) detail::raise<ConfigError>("config", "unknown key '" + it.key() + "'");
      if (b->option->count() > 0) continue;
      try {
        b->assign(it.value());
      } catch (const json::exception& e) {
        detail::raise<ConfigError>("config", "key '" + it.key() + "': " + e.what());
      }
    }
  }

  json effective() const {
    json j = json::object();
    for (const auto& b : bindings_) j[b.key] = b.dump();
    return j;
  }

 private:
  struct Binding {
    std::string key;
    CLI::Option* option;
    std::function<void(const json&)> assign;
    std::function<json()> dump;
  };

  template <class T>
  static void assign(T& target, const json& j) {
    if constexpr (std::is_same_v<T, std::optional<double>>)
      target = j.is_null() ? std::nullopt : std::optional<double>(j.get<double>());
    else
      target = j.get<T>();
  }
  template <class T>
  static json to_json(const T& v) {
    if constexpr (std::is_same_v<T, std::optional<double>>)
      return v ? json(*v) : json(nullptr);
    else
      return json(v);
  }

  std::vector<Binding> bindings_;
};

// "" -> empty; "a,b,c" -> list; "lo:step:hi" -> inclusive range.
std::vector<double> parse_gamma_grid(const std::string& text) {
  std::vector<double> grid;
  if (text.find_first_not_of(" \t") == std::string::npos) return grid;
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double x;
    try {
      x = std::stod(s, &used);
    } catch (const std::exception&) {
      detail::raise<ConfigError>("gammas", "not a number: '" + s + "'");
    }
    if (s.find_first_not_of(" \t", used) != std::string::npos)
      detail::raise<ConfigError>("gammas", "not a number: '" + s + "'");
    return x;
  };
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) detail::raise<ConfigError>("gammas", "range must be lo:step:hi");
    const double lo = number(parts[0]), step = number(parts[1]), hi = number(parts[2]);
    if (!(step > 0)) detail::raise<ConfigError>("gammas", "range step must be > 0");
    const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
        // snap to 12 decimals so 0.05-steps land on the nearest double of the decimal value
    for (long i = 0; i <= count; ++i) grid.push_back(std::round((lo + double(i) * step) * 1e12) / 1e12);
    return grid;
  }
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) grid.push_back(number(p));
  return grid;
}

std::string grid_to_string(const std::vector<double>& grid) {
  std::string s;
  for (std::size_t i = 0; i < grid.size(); ++i) s += (i ? "," : "") + io::format_double(grid[i]);
  return s;
}

// Writes to `path`, or to `fallback` when path is empty or "-".
void emit(const std::string& path, std::ostream& fallback, const std::string& text) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) detail::raise<ConfigError>("output", "cannot write '" + path + "'");
  f << text;
}

struct Globals {
  std::string config_path;
  double quad_abs = Tolerances{}.quadrature_abs;
  double quad_rel = Tolerances{}.quadrature_rel;
  double truncation = Tolerances{}.truncation_deficit;

  Tolerances tolerances() const {
    Tolerances t;
    t.quadrature_abs = quad_abs;
    t.quadrature_rel = quad_rel;
    t.truncation_deficit = truncation;
    return t;
  }
};

// ---------------------------------------------------------------- estimate
struct EstimateArgs {
  std::string input;
  std::string estimator = "cvar";
  std::size_t m = 0;
  double u = 2.0, v = 2.0;
  std::optional<double> confidence;
};

void cmd_estimate(const EstimateArgs& a, std::ostream& out, std::ostream& err) {
  if (a.estimator != "cvar" && a.estimator != "yun" && a.estimator != "pickands")
    detail::raise<ConfigError>("estimate", "estimator must be one of pickands, yun, cvar");
  if (a.m < 1) detail::raise<ConfigError>("estimate", "--m is required and must be >= 1");
  if (a.confidence && !(*a.confidence > 0.0 && *a.confidence < 1.0))
    detail::raise<ConfigError>("estimate", "confidence must lie in (0, 1)");
  const std::vector<double> data = io::read_values(a.input);
  if (data.empty()) detail::raise<DataError>("estimate", "input contains no values");

  SpacingSpec spec{a.u, a.v, a.m};
  if (a.estimator == "pickands") spec = {2.0, 2.0, a.m};
  double estimate;
  if (a.estimator == "pickands")
    estimate = pickands_estimate(data, a.m);
  else if (a.estimator == "yun")
    estimate = yun_estimate(data, spec);
  else
    estimate = cvar_pickands_estimate(data, spec);

  out << "estimator: " << a.estimator << '\n'
      << "n: " << data.size() << '\n'
      << "m: " << a.m << '\n'
      << "u: " << io::format_double(spec.u) << '\n'
      << "v: " << io::format_double(spec.v) << '\n'
      << "gamma_hat: " << io::format_double(estimate) << '\n';
  if (!a.confidence) return;

  if (a.estimator == "cvar" && !(estimate < 0.5)) {
    out << "interval: suppressed (gamma_hat >= 0.5, the asymptotic variance is infinite)\n";
    err << "warning: confidence interval suppressed because gamma_hat >= 0.5\n";
    return;
  }
  const ShapeParams<double> g{estimate};
  const double av = a.estimator == "cvar" ? cvar_pickands_av(spec.u, spec.v, g) : yun_av(spec.u, spec.v, g);
  const double z = normal_quantile(0.5 + 0.5 * *a.confidence);
  const double half = z * std::sqrt(av / double(a.m));
  out << "confidence: " << io::format_double(*a.confidence) << '\n'
      << "asymptotic_variance: " << io::format_double(av) << '\n'
      << "interval: [" << io::format_double(estimate - half) << ", " << io::format_double(estimate + half) << "]\n";
}

// ---------------------------------------------------------------- asympvar
struct AsympvarArgs {
  std::string gammas = "-1:0.05:0.45";
  double u = 2.0, v = 2.0;
  bool diagnostic = false;
  std::string out;
};

void cmd_asympvar(const AsympvarArgs& a, std::ostream& out) {
  const std::vector<double> grid = parse_gamma_grid(a.gammas);
  for (double g : grid)
    if (!(g < 0.5)) detail::raise<ConfigError>("asympvar", "every gamma must be < 0.5");
  if (!(a.u > 0) || !(a.v > 0) || a.u == 1.0 || a.v == 1.0)
    detail::raise<ConfigError>("asympvar", "u, v must be > 0 and != 1");
  std::ostringstream csv;
  csv << io::schema_line << '\n' << "gamma,av_cvar,av_pickands,ratio";
  if (a.diagnostic) csv << ",sigma2_quadratic_form,sigma2_printed,relative_gap";
  csv << '\n';
  for (double gamma : grid) {
    const ShapeParams<double> g{gamma};
    const double av_c = cvar_pickands_av(a.u, a.v, g);
    const double av_p = yun_av(a.u, a.v, g);
    csv << io::format_double(gamma) << ',' << io::format_double(av_c) << ',' << io::format_double(av_p) << ','
        << io::format_double(av_c / av_p);
    if (a.diagnostic) {
      const auto d = sigma2_discrepancy(a.u, a.v, g);
      csv << ',' << io::format_double(d.quadratic_form) << ',' << io::format_double(d.printed) << ','
          << io::format_double(d.relative_gap);
    }
    csv << '\n';
  }
  emit(a.out, out, csv.str());
}

// ---------------------------------------------------------------- mc-sweep
struct SweepArgs {
  std::string family = "gpd";
  std::string gammas = "-1:0.05:0.45";
  std::size_t n = 10000, m = 100, reps = 10000;
  double u = 2.0, v = 2.0;
  std::uint64_t seed = 20240601;
  unsigned workers = 0;
  std::string out, sidecar, replicates, condition_report;
  double rho = -1.0, c1 = 0.0, c2 = 0.0, rate_coef = 0.0, rate_exp = -1.0;
};

void cmd_mc_sweep(const SweepArgs& a, const json& effective, const Tolerances& tol, std::ostream& out,
                  std::ostream& err) {
  SweepConfig cfg;
  cfg.family = parse_family(a.family);
  cfg.gamma_grid = parse_gamma_grid(a.gammas);
  cfg.n = a.n;
  cfg.m = a.m;
  cfg.u = a.u;
  cfg.v = a.v;
  cfg.reps = a.reps;
  cfg.master_seed = a.seed;
  cfg.workers = a.workers;
  cfg.keep_replicates = !a.replicates.empty();
  cfg.validate();

  const SweepResult result = run_sweep(cfg);
  std::ostringstream csv;
  io::write_sweep_csv(csv, result.rows);
  emit(a.out, out, csv.str());

  for (const auto& row : result.rows)
    if (row.flagged)
      err << "warning: gamma=" << io::format_double(row.gamma) << " has more than 1% degenerate replications\n";

  if (!a.sidecar.empty()) {
    json side;
    side["schema"] = "evtcvar.v1";
    side["command"] = "mc-sweep";
    side["config"] = effective;
    side["config"]["gammas"] = grid_to_string(result.config.gamma_grid);
    side["tolerances"] = {{"quadrature_abs", tol.quadrature_abs}, {"quadrature_rel", tol.quadrature_rel}};
    json cells = json::array();
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
      const auto& r = result.rows[i];
      cells.push_back({{"cell", i},
                       {"gamma", r.gamma},
                       {"batch_checksum", r.batch_checksum},
                       {"mean_cvar", r.mean_cvar},
                       {"mean_pickands", r.mean_pickands},
                       {"flagged", r.flagged}});
    }
    side["cells"] = cells;
    emit(a.sidecar, out, side.dump(2) + "\n");
  }

  if (!a.replicates.empty()) {
    std::ostringstream rep;
    rep << io::schema_line << "\ncell,rep,gamma,seed,cvar,pickands\n";
    for (const auto& r : result.replicates)
      rep << r.cell << ',' << r.rep << ',' << io::format_double(result.rows[r.cell].gamma) << ',' << r.seed << ','
          << io::format_double(r.cvar) << ',' << io::format_double(r.pickands) << '\n';
    emit(a.replicates, out, rep.str());
  }

  if (!a.condition_report.empty()) {
    SecondOrderSpec so{a.rho, a.c1, a.c2, {a.rate_coef, a.rate_exp}};
    for (const auto& w : so.validate()) err << "warning: " << w << '\n';
    const auto rows = sweep_condition_report(cfg, so);
    std::ostringstream rep;
    rep << io::schema_line << "\ngamma,condition2,bias_b,bias_bound,asymptotic_sd,warn_condition2,warn_bias\n";
    for (const auto& r : rows) {
      rep << io::format_double(r.gamma) << ',' << io::format_double(r.condition2) << ','
          << io::format_double(r.bias_b) << ',' << io::format_double(r.bias_bound) << ','
          << io::format_double(r.asymptotic_sd) << ',' << int(r.warn_condition2) << ',' << int(r.warn_bias) << '\n';
      if (r.warn_condition2)
        err << "warning: sqrt(m) A(n/m) = " << io::format_double(r.condition2) << " exceeds "
            << condition2_warning_level << '\n';
      if (r.warn_bias)
        err << "warning: gamma=" << io::format_double(r.gamma)
            << " bias bound exceeds 10% of the asymptotic standard deviation\n";
    }
    emit(a.condition_report, out, rep.str());
  }
}

// ----------------------------------------------------------- process-check
struct ProcessArgs {
  std::string family = "gpd";
  double gamma = 0.0;
  std::size_t n = 100000, m = 100, reps = 2000, paths = 10000, steps = 100000;
  std::string grid = "0.5,1,2,4";
  std::uint64_t seed = 20240601;
  unsigned workers = 0;
  std::string out;
};

void cmd_process_check(const ProcessArgs& a, const Tolerances& tol, std::ostream& out) {
  const TailModel model{parse_family(a.family), a.gamma};
  const ShapeParams<double> g{a.gamma};
  g.require_finite_variance("process-check");
  const ProcessGrid grid(parse_gamma_grid(a.grid));
  grid.validate_for(a.n, a.m);
  const Eigen::MatrixXd kernel = kernel_cov(grid, g);
  const Eigen::MatrixXd emp = empirical_cov(empirical_tilde_B(model, a.n, a.m, grid, a.reps, a.seed, a.workers));
  const Eigen::MatrixXd lim =
      empirical_cov(simulate_limit_process(g, grid, a.steps, a.paths, a.seed, a.workers, tol.truncation_deficit));
  std::ostringstream csv;
  csv << io::schema_line << "\nt1,t2,cov_kernel,cov_empirical,cov_limit,rel_err_empirical,rel_err_limit\n";
  const auto& t = grid.t();
  for (Eigen::Index i = 0; i < kernel.rows(); ++i)
    for (Eigen::Index j = i; j < kernel.cols(); ++j) {
      const double k = kernel(i, j);
      csv << io::format_double(t[std::size_t(i)]) << ',' << io::format_double(t[std::size_t(j)]) << ','
          << io::format_double(k) << ',' << io::format_double(emp(i, j)) << ',' << io::format_double(lim(i, j))
          << ',' << io::format_double(std::abs(emp(i, j) - k) / std::abs(k)) << ','
          << io::format_double(std::abs(lim(i, j) - k) / std::abs(k)) << '\n';
    }
  emit(a.out, out, csv.str());
}

// ------------------------------------------------------------------ sample
struct SampleArgs {
  std::string family = "gpd";
  double gamma = 0.0;
  std::size_t n = 0;
  std::optional<std::uint64_t> seed;
  std::uint64_t master_seed = 0;
  std::size_t cell = 0, rep = 0;
  std::string out;
};

// Without --seed the stream seed is the one the sweep uses for (master-seed, cell, rep).
void cmd_sample(const SampleArgs& a, std::ostream& out) {
  if (a.n < 1) detail::raise<ConfigError>("sample", "--n is required and must be >= 1");
  const std::uint64_t seed = a.seed ? *a.seed : sweep_stream_seed(a.master_seed, a.cell, a.rep);
  const SampleBatch batch = sample(TailModel{parse_family(a.family), a.gamma}, a.n, seed);
  std::ostringstream text;
  text << "# family=" << to_string(batch.model.family) << " gamma=" << io::format_double(batch.model.gamma)
       << " n=" << a.n << " seed=" << seed << '\n';
  io::write_values(text, batch.values);
  emit(a.out, out, text.str());
}

// -------------------------------------------------------------------- plot
struct PlotArgs {
  std::string input, output, title = "Variance ratio";
};

void cmd_plot(const PlotArgs& a, std::ostream& out) {
  std::ifstream in(a.input);
  if (!in) detail::raise<ConfigError>("plot", "cannot open '" + a.input + "'");
  const auto rows = io::read_sweep_csv(in);
  if (rows.empty()) detail::raise<DataError>("plot", "sweep CSV has no data rows");
  emit(a.output, out, render_ratio_svg(rows, a.title));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extreme value index estimation with CVaR order statistics"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--quad-abs-tol", globals.quad_abs, "absolute quadrature tolerance")->capture_default_str();
  app.add_option("--quad-rel-tol", globals.quad_rel, "relative quadrature tolerance")->capture_default_str();
  app.add_option("--truncation-deficit", globals.truncation,
                 "variance share the limit-process simulation may drop near 0")
      ->capture_default_str();

  ConfigBindings bind_estimate, bind_asym, bind_sweep, bind_process, bind_sample, bind_plot;

  EstimateArgs est;
  auto* c_est = app.add_subcommand("estimate", "estimate gamma from a one-value-per-line file");
  c_est->add_option("--config", globals.config_path, "JSON config file (flags override)");
  bind_estimate.add(c_est, "input", est.input, "input data file");
  bind_estimate.add(c_est, "estimator", est.estimator, "pickands | yun | cvar");
  bind_estimate.add(c_est, "m", est.m, "intermediate order m");
  bind_estimate.add(c_est, "u", est.u, "spacing factor u");
  bind_estimate.add(c_est, "v", est.v, "spacing factor v");
  bind_estimate.add(c_est, "confidence", est.confidence, "Wald interval confidence level");

  AsympvarArgs asym;
  auto* c_asym = app.add_subcommand("asympvar", "asymptotic variance table");
  c_asym->add_option("--config", globals.config_path, "JSON config file (flags override)");
  bind_asym.add(c_asym, "gammas", asym.gammas, "gamma grid: a,b,c or lo:step:hi");
  bind_asym.add(c_asym, "u", asym.u, "spacing factor u");
  bind_asym.add(c_asym, "v", asym.v, "spacing factor v");
  bind_asym.add(c_asym, "diagnostic", asym.diagnostic, "append sigma^2 discrepancy columns");
  bind_asym.add(c_asym, "out", asym.out, "output CSV (default stdout)");

  SweepArgs sw;
  auto* c_sweep = app.add_subcommand("mc-sweep", "Monte Carlo variance-ratio sweep");
  c_sweep->add_option("--config", globals.config_path, "JSON config file (flags override)");
  bind_sweep.add(c_sweep, "family", sw.family, "gev | gpd");
  bind_sweep.add(c_sweep, "gammas", sw.gammas, "gamma grid: a,b,c or lo:step:hi");
  bind_sweep.add(c_sweep, "n", sw.n, "sample size");
  bind_sweep.add(c_sweep, "m", sw.m, "intermediate order");
  bind_sweep.add(c_sweep, "u", sw.u, "spacing factor u");
  bind_sweep.add(c_sweep, "v", sw.v, "spacing factor v");
  bind_sweep.add(c_sweep, "reps", sw.reps, "replications per gamma");
  bind_sweep.add(c_sweep, "seed", sw.seed, "master seed");
  bind_sweep.add(c_sweep, "workers", sw.workers, "worker threads (0 = auto)");
  bind_sweep.add(c_sweep, "out", sw.out, "output CSV (default stdout)");
  bind_sweep.add(c_sweep, "sidecar", sw.sidecar, "JSON provenance sidecar");
  bind_sweep.add(c_sweep, "replicates", sw.replicates, "per-replication estimates CSV");
  bind_sweep.add(c_sweep, "condition-report", sw.condition_report, "second-order diagnostics CSV");
  bind_sweep.add(c_sweep, "rho", sw.rho, "second-order parameter rho");
  bind_sweep.add(c_sweep, "c1", sw.c1, "second-order constant c1");
  bind_sweep.add(c_sweep, "c2", sw.c2, "second-order constant c2");
  bind_sweep.add(c_sweep, "rate-coef", sw.rate_coef, "A(t) = coef * t^exp: coefficient");
  bind_sweep.add(c_sweep, "rate-exp", sw.rate_exp, "A(t) = coef * t^exp: exponent");

  ProcessArgs pc;
  auto* c_proc = app.add_subcommand("process-check", "covariance of the empirical CVaR process vs its limit");
  c_proc->add_option("--config", globals.config_path, "JSON config file (flags override)");
  bind_process.add(c_proc, "family", pc.family, "gev | gpd");
  bind_process.add(c_proc, "gamma", pc.gamma, "extreme value index");
  bind_process.add(c_proc, "n", pc.n, "sample size");
  bind_process.add(c_proc, "m", pc.m, "intermediate order");
  bind_process.add(c_proc, "grid", pc.grid, "t grid, comma separated");
  bind_process.add(c_proc, "reps", pc.reps, "empirical replications");
  bind_process.add(c_proc, "paths", pc.paths, "limit-process paths");
  bind_process.add(c_proc, "steps", pc.steps, "limit-process mesh cells");
  bind_process.add(c_proc, "seed", pc.seed, "master seed");
  bind_process.add(c_proc, "workers", pc.workers, "worker threads (0 = auto)");
  bind_process.add(c_proc, "out", pc.out, "output CSV (default stdout)");

  SampleArgs sa;
  auto* c_sample = app.add_subcommand("sample", "write a seeded sample, one value per line");
  c_sample->add_option("--config", globals.config_path, "JSON config file (flags override)");
  bind_sample.add(c_sample, "family", sa.family, "gev | gpd");
  bind_sample.add(c_sample, "gamma", sa.gamma, "extreme value index");
  bind_sample.add(c_sample, "n", sa.n, "sample size");
  auto* seed_opt = c_sample->add_option("--seed", sa.seed, "stream seed");
  auto* master_opt = bind_sample.add(c_sample, "master-seed", sa.master_seed, "sweep master seed");
  bind_sample.add(c_sample, "cell", sa.cell, "sweep cell (gamma index)");
  bind_sample.add(c_sample, "rep", sa.rep, "sweep replication");
  seed_opt->excludes(master_opt);
  bind_sample.add(c_sample, "out", sa.out, "output file (default stdout)");

  PlotArgs pl;
  auto* c_plot = app.add_subcommand("plot", "render a sweep CSV as an SVG chart");
  bind_plot.add(c_plot, "input", pl.input, "sweep CSV")->required();
  bind_plot.add(c_plot, "output", pl.output, "SVG path (default stdout)");
  bind_plot.add(c_plot, "title", pl.title, "chart title");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: kind=config code=2 message=" << e.what() << '\n';
    return 2;
  }

  try {
    const Tolerances tol = globals.tolerances();
    if (c_est->parsed()) {
      bind_estimate.apply_file(globals.config_path);
      if (est.input.empty()) detail::raise<ConfigError>("estimate", "--input is required");
      cmd_estimate(est, out, err);
    } else if (c_asym->parsed()) {
      bind_asym.apply_file(globals.config_path);
      cmd_asympvar(asym, out);
    } else if (c_sweep->parsed()) {
      bind_sweep.apply_file(globals.config_path);
      cmd_mc_sweep(sw, bind_sweep.effective(), tol, out, err);
    } else if (c_proc->parsed()) {
      bind_process.apply_file(globals.config_path);
      cmd_process_check(pc, tol, out);
    } else if (c_sample->parsed()) {
      bind_sample.apply_file(globals.config_path);
      cmd_sample(sa, out);
    } else if (c_plot->parsed()) {
      cmd_plot(pl, out);
    }
  } catch (const Error& e) {
    err << "error: kind=" << e.kind() << " code=" << e.exit_code() << " message=" << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: kind=numeric code=5 message=" << e.what() << '\n';
    return 5;
  }
  return 0;
}

}  // namespace evtcvar::cli
