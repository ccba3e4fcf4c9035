#pragma once

// Order statistics, CVaR order statistics, and the Pickands-type estimators
// of the extreme value index built from them.

#include <cstddef>
#include <span>
#include <vector>

#include "evtcvar/types.hpp"

namespace evtcvar {

/// The k_avail largest values of a sample of size n_total, nonincreasing.
struct DescendingOrderView {
  std::vector<double> values;
  std::size_t n_total = 0;

  std::size_t k_avail() const { return values.size(); }
  /// One-based access X_i^(n).
  double operator[](std::size_t i) const { return values[i - 1]; }
};

/// Prefix means Y_k = (1/k) sum_{i<=k} X_i^(n) of a DescendingOrderView.
struct CvarOrderView {
  std::vector<double> values;
  std::size_t n_total = 0;

  std::size_t k_avail() const { return values.size(); }
  double operator[](std::size_t k) const { return values[k - 1]; }
};

/// Partial selection of the k largest values; O(n + k log k).
/// Throws DomainError for k outside [1, n] and DataError for non-finite input.
DescendingOrderView top_k_descending(std::span<const double> sample, std::size_t k);

/// Wraps values that are already sorted in nonincreasing order.
DescendingOrderView make_descending_view(std::vector<double> values, std::size_t n_total);

/// Prefix means with compensated (Neumaier) summation.
CvarOrderView cvar_order_stats(const DescendingOrderView& view);

/// (1/log v) log[(X_m - X_[um]) / (X_[vm] - X_[uvm])].
double yun_estimate(std::span<const double> sample, const SpacingSpec& spec);
double yun_estimate(const DescendingOrderView& view, const SpacingSpec& spec);

/// Classical Pickands estimator; yun_estimate with u = v = 2, valid for m <= n/4.
double pickands_estimate(std::span<const double> sample, std::size_t m);

/// The CVaR-based Pickands estimator: Yun's statistic on CVaR order statistics.
double cvar_pickands_estimate(std::span<const double> sample, const SpacingSpec& spec);
double cvar_pickands_estimate(const DescendingOrderView& view, const SpacingSpec& spec);
double cvar_pickands_estimate(const CvarOrderView& view, const SpacingSpec& spec);

}  // namespace evtcvar
