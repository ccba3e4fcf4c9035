#include <doctest.h>

#include <cmath>
#include <sstream>

#include "evtcvar/asymptotics.hpp"
#include "evtcvar/estimators.hpp"
#include "evtcvar/io.hpp"
#include "evtcvar/mc_harness.hpp"

using namespace evtcvar;
using doctest::Approx;

namespace {

SweepConfig small_config() {
  SweepConfig c;
  c.gamma_grid = {0.2, -0.5, 0.0};
  c.family = Family::gev;
  c.n = 2000;
  c.m = 40;
  c.reps = 300;
  c.master_seed = 99;
  return c;
}

std::string csv(const SweepResult& r) {
  std::ostringstream out;
  io::write_sweep_csv(out, r.rows);
  return out.str();
}

}  // namespace

TEST_CASE("default gamma grid") {
  const auto grid = default_gamma_grid();
  CHECK(grid.size() == 30);
  CHECK(grid.front() == -1.0);
  CHECK(grid.back() == 0.45);
}

TEST_CASE("config validation") {
  SweepConfig c = small_config();
  c.gamma_grid = {0.5};
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = small_config();
  c.reps = 1;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = small_config();
  c.m = 600;  // [uvm] > n
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = small_config();
  c.u = 1.0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  CHECK_NOTHROW(small_config().validate());
}

TEST_CASE("sweep is deterministic across runs and worker counts") {
  SweepConfig c = small_config();
  c.workers = 1;
  const std::string a = csv(run_sweep(c));
  const std::string b = csv(run_sweep(c));
  c.workers = 8;
  const std::string d = csv(run_sweep(c));
  CHECK(a == b);
  CHECK(a == d);
}

TEST_CASE("rows follow from the replicates") {
  SweepConfig c = small_config();
  c.keep_replicates = true;
  const SweepResult r = run_sweep(c);
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[0].gamma == -0.5);
  CHECK(r.rows[2].gamma == 0.2);
  REQUIRE(r.replicates.size() == 3 * c.reps);

  const SpacingSpec spec = c.spacing();
  for (std::size_t cell = 0; cell < 3; ++cell) {
    const SweepRow& row = r.rows[cell];
    const TailModel model{c.family, row.gamma};
    double s1 = 0, s2 = 0, p1 = 0, p2 = 0;
    std::uint64_t checks = 0;
    for (std::size_t rep = 0; rep < c.reps; ++rep) {
      const Replicate& x = r.replicates[cell * c.reps + rep];
      CHECK(x.seed == sweep_stream_seed(c.master_seed, cell, rep));
      // Both estimators see the same full sample.
      const auto full = sample(model, c.n, x.seed).values;
      const auto view = top_k_descending(full, spec.indices_for(c.n).max());
      checks += batch_checksum(view.values);
      CHECK(x.cvar == cvar_pickands_estimate(full, spec));
      CHECK(x.pickands == yun_estimate(full, spec));
      s1 += x.cvar;
      s2 += x.cvar * x.cvar;
      p1 += x.pickands;
      p2 += x.pickands * x.pickands;
    }
    CHECK(row.batch_checksum == checks);
    const double N = double(c.reps);
    const double vc = (s2 - s1 * s1 / N) / (N - 1) * double(c.m);
    const double vp = (p2 - p1 * p1 / N) / (N - 1) * double(c.m);
    CHECK(row.var_sim_cvar == Approx(vc).epsilon(1e-9));
    CHECK(row.var_sim_pickands == Approx(vp).epsilon(1e-9));
    CHECK(row.ratio_sim == Approx(vc / vp).epsilon(1e-9));
    CHECK(row.stderr_cvar == Approx(row.var_sim_cvar * std::sqrt(2.0 / (N - 1))));
    CHECK(row.av_cvar == cvar_pickands_av(2.0, 2.0, ShapeParams{row.gamma}));
    CHECK(row.ratio_asym == row.av_cvar / row.av_pickands);
    CHECK(row.degenerate_cvar == 0);
    CHECK(!row.flagged);
  }
}

TEST_CASE("condition report") {
  SweepConfig c = small_config();
  c.n = 10000;
  c.m = 100;
  SecondOrderSpec exact{-1.0, 0.0, 0.0, {0.0, -1.0}};
  for (const auto& row : sweep_condition_report(c, exact)) {
    CHECK(row.bias_bound == 0.0);
    CHECK(!row.warn_bias);
  }

  SecondOrderSpec s{-1.0, 1.0, 0.5, {1.0, -1.0}};
  const auto rows = sweep_condition_report(c, s);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    CHECK(row.condition2 == 0.1);
    CHECK(!row.warn_condition2);
    CHECK(row.bias_bound == Approx(std::abs(bias_b(c.spacing(), ShapeParams{row.gamma}, s)) * 0.1));
  }

  c.m = 2500;
  SecondOrderSpec slow{-0.25, 1.0, 0.0, {1.0, -0.25}};
  for (const auto& row : sweep_condition_report(c, slow)) {
    CHECK(row.condition2 == Approx(50.0 * std::pow(4.0, -0.25)).epsilon(1e-14));
    CHECK(row.condition2 == Approx(35.36).epsilon(1e-3));
    CHECK(row.warn_condition2);
  }
}
