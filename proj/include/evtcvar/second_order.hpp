#pragma once

// Second-order regular variation: the limit functions H and H~, the
// asymptotic bias coefficient b(u, v, gamma, rho), and diagnostics for the
// intermediate-sequence condition sqrt(m) A(n/m) -> 0.

#include <cstddef>
#include <string>
#include <vector>

#include "evtcvar/config.hpp"
#include "evtcvar/distributions.hpp"
#include "evtcvar/types.hpp"

namespace evtcvar {

/// A(t) = coefficient * t^exponent.
struct RateFunction {
  double coefficient = 0.0;
  double exponent = 0.0;
  double operator()(double t) const;
};

struct SecondOrderSpec {
  double rho = -1.0;
  double c1 = 0.0;
  double c2 = 0.0;
  RateFunction rate{};

  /// Throws DomainError for rho > 0 or a rate that grows; returns warnings
  /// (e.g. a constant nonzero A, which never vanishes).
  std::vector<std::string> validate() const;
};

/// H(y) = c1 int_y^1 s^(-gamma-1) int_s^1 w^(-rho-1) dw ds + c2 int_y^1 s^(-(rho+gamma)-1) ds,
/// in closed form for every (gamma, rho) case.
double big_H(double y, ShapeParams<double> g, const SecondOrderSpec& s);

/// H~(y) = (1/y) int_0^y H - int_0^1 H, by adaptive quadrature.
double big_H_tilde(double y, ShapeParams<double> g, const SecondOrderSpec& s, const Tolerances& tol = {});

/// Leading coefficient of the bias term C_{n,m}(u, v) = b sqrt(m) A(n/m) + o(sqrt(m) A(n/m)).
double bias_b(const SpacingSpec& spec, ShapeParams<double> g, const SecondOrderSpec& s, const Tolerances& tol = {});

/// sqrt(m) A(n/m).
double condition2_statistic(std::size_t m, std::size_t n, const SecondOrderSpec& s);

/// Threshold above which condition2_statistic is reported as a warning.
inline constexpr double condition2_warning_level = 0.5;

/// R(t, y) = (V(y/t) - V(1/t)) / a(t) - h~_gamma(y).
double remainder_R(double t, double y, const TailModel& model, const Tolerances& tol = {});

}  // namespace evtcvar
