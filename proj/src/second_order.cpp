#include "evtcvar/second_order.hpp"

#include <cmath>

#include "evtcvar/asymptotics.hpp"
#include "evtcvar/errors.hpp"
#include "evtcvar/quadrature.hpp"

namespace evtcvar {

double RateFunction::operator()(double t) const {
  if (coefficient == 0.0) return 0.0;
  return coefficient * std::pow(t, exponent);
}

std::vector<std::string> SecondOrderSpec::validate() const {
  std::vector<std::string> warnings;
  if (!(rho <= 0.0)) detail::raise<DomainError>("SecondOrderSpec", "rho must be <= 0");
  if (!std::isfinite(c1) || !std::isfinite(c2)) detail::raise<DomainError>("SecondOrderSpec", "c1, c2 must be finite");
  if (rate.coefficient != 0.0) {
    if (rate.exponent > 0.0)
      detail::raise<DomainError>("SecondOrderSpec", "A(t) must vanish as t grows; exponent must be <= 0");
    if (rate.exponent == 0.0) warnings.emplace_back("constant nonzero A(t) does not tend to 0");
    if (rate.exponent != rho) warnings.emplace_back("A(t) exponent differs from rho");
  }
  return warnings;
}

namespace {

// int_y^1 s^(p-1) ds
double power_integral(double p, double log_y) { return detail::expm1_ratio(-p, log_y); }

// int_y^1 s^(p-1) (-log s) ds
double log_power_integral(double p, double log_y) {
  if (p == 0.0) return 0.5 * log_y * log_y;
  const double yp = std::exp(p * log_y);
  return -std::expm1(p * log_y) / (p * p) + yp * log_y / p;
}

// H with (c1, c2) = (1, 0)
double big_H_c1(double log_y, double gamma, double rho) {
  if (rho == 0.0) return log_power_integral(-gamma, log_y);
  return (power_integral(-gamma - rho, log_y) - power_integral(-gamma, log_y)) / rho;
}

// H with (c1, c2) = (0, 1)
double big_H_c2(double log_y, double gamma, double rho) { return power_integral(-(rho + gamma), log_y); }

void check_y(double y, const char* where) {
  if (!(y > 0.0) || !std::isfinite(y)) detail::raise<DomainError>(where, "y must be a positive finite number");
}

}  // namespace

double big_H(double y, ShapeParams<double> g, const SecondOrderSpec& s) {
  check_y(y, "big_H");
  s.validate();
  const double log_y = std::log(y);
  double out = 0.0;
  if (s.c1 != 0.0) out += s.c1 * big_H_c1(log_y, g.gamma, s.rho);
  if (s.c2 != 0.0) out += s.c2 * big_H_c2(log_y, g.gamma, s.rho);
  return out;
}

double big_H_tilde(double y, ShapeParams<double> g, const SecondOrderSpec& s, const Tolerances& tol) {
  check_y(y, "big_H_tilde");
  g.require_cvar("big_H_tilde");
  s.validate();
  if (y == 1.0) return 0.0;
  const double gamma = g.gamma, rho = s.rho;
  // Each basis function is integrated separately so the result is linear in (c1, c2).
  auto tilde = [&](auto basis) {
    auto f = [&](double x) { return basis(std::log(x), gamma, rho); };
    const double head = quad::integrate_from_zero(f, y, tol.quadrature_abs * std::min(1.0, y) / 2,
                                                  tol.quadrature_rel, tol.max_subdivisions)
                            .value;
    const double unit =
        quad::integrate_from_zero(f, 1.0, tol.quadrature_abs / 2, tol.quadrature_rel, tol.max_subdivisions).value;
    return head / y - unit;
  };
  double out = 0.0;
  if (s.c1 != 0.0) out += s.c1 * tilde(big_H_c1);
  if (s.c2 != 0.0) out += s.c2 * tilde(big_H_c2);
  return out;
}

double bias_b(const SpacingSpec& spec, ShapeParams<double> g, const SecondOrderSpec& s, const Tolerances& tol) {
  spec.validate();
  g.require_cvar("bias_b");
  const double u = spec.u, v = spec.v, gamma = g.gamma;
  const double ht_uv = big_H_tilde(u * v, g, s, tol);
  const double ht_v = big_H_tilde(v, g, s, tol);
  const double ht_u = big_H_tilde(u, g, s, tol);
  if (gamma == 0.0) return (ht_uv - ht_v - ht_u) / std::log(u);
  const double lead = gamma * (1.0 - gamma) / (-std::expm1(-gamma * std::log(u)));
  return lead * std::pow(v, 2.0 * gamma) * (ht_uv - ht_v - std::pow(v, -gamma) * ht_u);
}

double condition2_statistic(std::size_t m, std::size_t n, const SecondOrderSpec& s) {
  if (m < 1) detail::raise<DomainError>("condition2_statistic", "m must be >= 1");
  if (m > n) detail::raise<DomainError>("condition2_statistic", "m must not exceed n");
  return std::sqrt(double(m)) * s.rate(double(n) / double(m));
}

double remainder_R(double t, double y, const TailModel& model, const Tolerances& tol) {
  if (!(t > 1.0)) detail::raise<DomainError>("remainder_R", "t must be > 1");
  if (!(y > 0.0) || !(y <= t)) detail::raise<DomainError>("remainder_R", "y must lie in (0, t]");
  model.shape().require_cvar("remainder_R");
  if (y == 1.0) return 0.0;
  const double spread = model.cvar_curve_V(y / t, tol) - model.cvar_curve_V(1.0 / t, tol);
  return spread / model.scale_a(t) - h_tilde_gamma(y, model.shape());
}

}  // namespace evtcvar
