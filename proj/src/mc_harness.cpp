#include "evtcvar/mc_harness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "evtcvar/asymptotics.hpp"
#include "evtcvar/errors.hpp"
#include "evtcvar/estimators.hpp"
#include "evtcvar/parallel.hpp"
#include "evtcvar/random.hpp"

namespace evtcvar {

std::vector<double> default_gamma_grid() {
  std::vector<double> grid;
  for (int i = -20; i <= 9; ++i) grid.push_back(i / 20.0);
  return grid;
}

void SweepConfig::validate() const {
  for (double g : gamma_grid)
    if (!(g >= -1.0 && g < 0.5)) detail::raise<ConfigError>("SweepConfig", "gamma grid values must lie in [-1, 0.5)");
  if (n < 1 || m < 1) detail::raise<ConfigError>("SweepConfig", "n and m must be >= 1");
  if (reps < 2) detail::raise<ConfigError>("SweepConfig", "reps must be >= 2");
  try {
    spacing().indices_for(n);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

std::uint64_t sweep_stream_seed(std::uint64_t master_seed, std::size_t cell, std::size_t rep) {
  return rng::derive_stream_seed(master_seed, cell, rep);
}

std::uint64_t batch_checksum(const std::vector<double>& values) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (double v : values) {
    h ^= std::bit_cast<std::uint64_t>(v);
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

struct Moments {
  double mean = std::numeric_limits<double>::quiet_NaN();
  double variance = std::numeric_limits<double>::quiet_NaN();
  std::size_t count = 0;
};

// Two-pass mean and unbiased variance over the finite entries, in index order.
Moments moments(const std::vector<double>& x) {
  Moments out;
  double sum = 0;
  for (double v : x)
    if (std::isfinite(v)) {
      sum += v;
      ++out.count;
    }
  if (out.count < 2) return out;
  out.mean = sum / double(out.count);
  double ss = 0;
  for (double v : x)
    if (std::isfinite(v)) ss += (v - out.mean) * (v - out.mean);
  out.variance = ss / double(out.count - 1);
  return out;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();
  SweepResult result;
  result.config = config;
  std::sort(result.config.gamma_grid.begin(), result.config.gamma_grid.end());
  const auto& grid = result.config.gamma_grid;
  const SpacingSpec spec = config.spacing();
  const std::size_t k = spec.indices_for(config.n).max();
  const std::size_t reps = config.reps;
  const double md = double(config.m);

  const std::size_t tasks = grid.size() * reps;
  std::vector<double> est_cvar(tasks), est_pick(tasks);
  std::vector<std::uint64_t> checks(tasks);
  parallel_for(tasks, config.workers, [&](std::size_t task) {
    const std::size_t cell = task / reps, rep = task % reps;
    const TailModel model{config.family, grid[cell]};
    const DescendingOrderView view{sample_top_k(model, config.n, k, sweep_stream_seed(config.master_seed, cell, rep)),
                                   config.n};
    checks[task] = batch_checksum(view.values);
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    try {
      est_cvar[task] = cvar_pickands_estimate(view, spec);
    } catch (const DegenerateSampleError&) {
      est_cvar[task] = nan;
    }
    try {
      est_pick[task] = yun_estimate(view, spec);
    } catch (const DegenerateSampleError&) {
      est_pick[task] = nan;
    }
  });

  for (std::size_t cell = 0; cell < grid.size(); ++cell) {
    const ShapeParams<double> g{grid[cell]};
    SweepRow row;
    row.gamma = g.gamma;
    row.av_cvar = cvar_pickands_av(spec.u, spec.v, g);
    row.av_pickands = yun_av(spec.u, spec.v, g);
    row.ratio_asym = row.av_cvar / row.av_pickands;

    const auto first = std::ptrdiff_t(cell * reps), last = std::ptrdiff_t((cell + 1) * reps);
    const std::vector<double> cvar(est_cvar.begin() + first, est_cvar.begin() + last);
    const std::vector<double> pick(est_pick.begin() + first, est_pick.begin() + last);
    const Moments mc = moments(cvar), mp = moments(pick);
    row.degenerate_cvar = reps - mc.count;
    row.degenerate_pickands = reps - mp.count;
    row.mean_cvar = mc.mean;
    row.mean_pickands = mp.mean;
    row.var_sim_cvar = md * mc.variance;
    row.var_sim_pickands = md * mp.variance;
    row.ratio_sim = row.var_sim_cvar / row.var_sim_pickands;
    row.stderr_cvar = row.var_sim_cvar * std::sqrt(2.0 / double(mc.count - 1));
    row.stderr_pickands = row.var_sim_pickands * std::sqrt(2.0 / double(mp.count - 1));
    std::uint64_t sum = 0;
    for (auto i = first; i < last; ++i) sum += checks[std::size_t(i)];
    row.batch_checksum = sum;
    row.flagged = 100 * std::max(row.degenerate_cvar, row.degenerate_pickands) > reps;
    result.rows.push_back(row);

    if (config.keep_replicates)
      for (std::size_t rep = 0; rep < reps; ++rep)
        result.replicates.push_back({cell, rep, sweep_stream_seed(config.master_seed, cell, rep),
                                     cvar[rep], pick[rep]});
  }
  return result;
}

std::vector<ConditionRow> sweep_condition_report(const SweepConfig& config, const SecondOrderSpec& second_order) {
  config.validate();
  second_order.validate();
  std::vector<double> grid = config.gamma_grid;
  std::sort(grid.begin(), grid.end());
  const SpacingSpec spec = config.spacing();
  const double stat = condition2_statistic(config.m, config.n, second_order);
  std::vector<ConditionRow> rows;
  for (double gamma : grid) {
    const ShapeParams<double> g{gamma};
    ConditionRow row;
    row.gamma = gamma;
    row.condition2 = stat;
    row.bias_b = (second_order.c1 == 0.0 && second_order.c2 == 0.0) ? 0.0 : bias_b(spec, g, second_order);
    row.bias_bound = std::abs(row.bias_b) * std::abs(stat);
    row.asymptotic_sd = std::sqrt(cvar_pickands_av(spec.u, spec.v, g)) * std::pow(spec.v, gamma) *
                        std::abs(std::log(spec.v));
    row.warn_condition2 = std::abs(stat) > condition2_warning_level;
    row.warn_bias = row.bias_bound > 0.1 * row.asymptotic_sd;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace evtcvar
