#pragma once

// Finite-dimensional checks of the empirical CVaR process against its
// Gaussian limit: empirical paths of B~_n, simulated paths of the limit
// process B~, and their sample covariances.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "evtcvar/distributions.hpp"
#include "evtcvar/types.hpp"

namespace evtcvar {

/// Strictly increasing positive evaluation points t.
class ProcessGrid {
 public:
  explicit ProcessGrid(std::vector<double> t_values);

  /// Rejects points with [m t] < 1 or m t > n.
  void validate_for(std::size_t n, std::size_t m) const;

  const std::vector<double>& t() const { return t_; }
  std::size_t size() const { return t_.size(); }

 private:
  std::vector<double> t_;
};

struct ProcessPaths {
  Eigen::MatrixXd values;  // rows = replications, columns = grid points
  double gamma = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

/// B~_n(t) = sqrt(m) (Y_[mt] - V(mt/n)) / a(n/m) on each replication.
ProcessPaths empirical_tilde_B(const TailModel& model, std::size_t n, std::size_t m, const ProcessGrid& grid,
                               std::size_t reps, std::uint64_t seed, unsigned workers = 0);

/// Paths of B~(t) = (1/t) int_0^t s^(-gamma-1) W(s) ds.
///
/// W is sampled exactly on a geometric mesh of `steps` cells over
/// [eps, max t] that contains every grid point. Between nodes the integral
/// uses the piecewise-linear interpolant of W; on [0, eps] it uses the
/// bridge mean W(eps) s / eps. eps is the largest value whose omitted
/// bridge variance stays below `truncation_deficit` of Var B~(min t).
ProcessPaths simulate_limit_process(ShapeParams<double> g, const ProcessGrid& grid, std::size_t steps,
                                    std::size_t reps, std::uint64_t seed, unsigned workers = 0,
                                    double truncation_deficit = 1e-3);

/// Truncation point used by simulate_limit_process.
double limit_process_epsilon(ShapeParams<double> g, double t_min, double truncation_deficit);

/// Unbiased sample covariance across replications (exactly symmetric).
Eigen::MatrixXd empirical_cov(const ProcessPaths& paths);

/// cov_kernel evaluated on every pair of grid points.
Eigen::MatrixXd kernel_cov(const ProcessGrid& grid, ShapeParams<double> g);

}  // namespace evtcvar
