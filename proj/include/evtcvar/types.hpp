#pragma once

#include <cmath>
#include <cstddef>
#include <string>

#include "evtcvar/errors.hpp"

namespace evtcvar {

/// Extreme value index. CVaR-based quantities need gamma < 1; anything that
/// involves the limit variance needs gamma < 1/2.
template <typename Scalar = double>
struct ShapeParams {
  Scalar gamma{0};

  void require_cvar(const char* where) const {
    if (!(gamma < Scalar(1)))
      detail::raise<DomainError>(where, "gamma must be < 1 for CVaR to exist, got " +
                                            std::to_string(double(gamma)));
  }
  void require_finite_variance(const char* where) const {
    if (!(gamma < Scalar(0.5)))
      detail::raise<DomainError>(where, "gamma must be < 1/2 for a finite limit variance, got " +
                                            std::to_string(double(gamma)));
  }
};

template <typename Scalar>
ShapeParams(Scalar) -> ShapeParams<Scalar>;

/// One-based order-statistic indices m, [um], [vm], [uvm].
struct SpacingIndices {
  std::size_t m, um, vm, uvm;
  std::size_t max() const {
    std::size_t k = m;
    for (std::size_t i : {um, vm, uvm}) k = i > k ? i : k;
    return k;
  }
};

/// Estimator tuning: the spacing factors (u, v) and intermediate order m.
struct SpacingSpec {
  double u = 2.0;
  double v = 2.0;
  std::size_t m = 100;

  void validate() const {
    if (!(u > 0.0) || !(v > 0.0) || u == 1.0 || v == 1.0 || !std::isfinite(u) || !std::isfinite(v))
      detail::raise<DomainError>("SpacingSpec", "u and v must be positive, finite and != 1");
    if (m < 1) detail::raise<DomainError>("SpacingSpec", "m must be >= 1");
  }

  // [x] is the integer part; all arguments are positive here.
  SpacingIndices indices() const {
    validate();
    const double md = static_cast<double>(m);
    return {m, static_cast<std::size_t>(std::floor(u * md)), static_cast<std::size_t>(std::floor(v * md)),
            static_cast<std::size_t>(std::floor(u * v * md))};
  }

  /// Indices checked against a sample of size n.
  SpacingIndices indices_for(std::size_t n) const {
    const SpacingIndices idx = indices();
    for (std::size_t i : {idx.m, idx.um, idx.vm, idx.uvm}) {
      if (i < 1 || i > n)
        detail::raise<DomainError>("SpacingSpec", "order-statistic index " + std::to_string(i) +
                                                      " outside [1, " + std::to_string(n) + "]");
    }
    return idx;
  }
};

}  // namespace evtcvar
