#pragma once

// Deterministic Monte Carlo sweeps over the extreme value index comparing
// the CVaR-based Pickands estimator with the order-statistic (Pickands /
// Yun) estimator on identical samples.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "evtcvar/distributions.hpp"
#include "evtcvar/second_order.hpp"
#include "evtcvar/types.hpp"

namespace evtcvar {

struct SweepConfig {
  std::vector<double> gamma_grid;
  Family family = Family::gpd;
  std::size_t n = 10000;
  std::size_t m = 100;
  double u = 2.0;
  double v = 2.0;
  std::size_t reps = 10000;
  std::uint64_t master_seed = 20240601;
  unsigned workers = 0;  // 0 = EVTCVAR_WORKERS or hardware concurrency
  bool keep_replicates = false;

  SpacingSpec spacing() const { return {u, v, m}; }
  /// Throws ConfigError on any violation.
  void validate() const;
};

/// -1.00, -0.95, ..., 0.45
std::vector<double> default_gamma_grid();

struct SweepRow {
  double gamma = 0;
  double av_cvar = 0;
  double av_pickands = 0;
  double ratio_asym = 0;
  double var_sim_cvar = 0;  // m * sample variance of the estimates
  double var_sim_pickands = 0;
  double ratio_sim = 0;
  std::size_t degenerate_cvar = 0;
  std::size_t degenerate_pickands = 0;
  double stderr_cvar = 0;  // standard error of var_sim_cvar under normality
  double stderr_pickands = 0;
  // Not part of the CSV schema.
  double mean_cvar = 0;
  double mean_pickands = 0;
  std::uint64_t batch_checksum = 0;
  bool flagged = false;  // more than 1% degenerate replications
};

struct Replicate {
  std::size_t cell = 0;
  std::size_t rep = 0;
  std::uint64_t seed = 0;
  double cvar = 0;  // NaN when degenerate
  double pickands = 0;
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;
  std::vector<Replicate> replicates;  // filled when config.keep_replicates
};

SweepResult run_sweep(const SweepConfig& config);

/// Seed of replication `rep` in cell `cell` of a sweep.
std::uint64_t sweep_stream_seed(std::uint64_t master_seed, std::size_t cell, std::size_t rep);

/// Hash of a batch of values, used to confirm that both estimators see the same sample.
std::uint64_t batch_checksum(const std::vector<double>& values);

struct ConditionRow {
  double gamma = 0;
  double condition2 = 0;       // sqrt(m) A(n/m)
  double bias_b = 0;           // b(u, v, gamma, rho)
  double bias_bound = 0;       // |b| sqrt(m) A(n/m)
  double asymptotic_sd = 0;    // sd of the limit of sqrt(m)(A_nm - v^gamma)
  bool warn_condition2 = false;
  bool warn_bias = false;      // bias bound above 10% of asymptotic_sd
};

std::vector<ConditionRow> sweep_condition_report(const SweepConfig& config, const SecondOrderSpec& second_order);

}  // namespace evtcvar
