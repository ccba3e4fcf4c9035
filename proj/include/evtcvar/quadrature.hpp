#pragma once

// Adaptive Gauss-Kronrod (10/21 point) quadrature with global bisection,
// plus an exponential substitution for integrands with an integrable
// singularity at the left endpoint of [0, b].

#include <array>
#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "evtcvar/config.hpp"
#include "evtcvar/errors.hpp"

namespace evtcvar::quad {

struct Result {
  double value = 0;
  double error = 0;
  long intervals = 0;
};

namespace detail {

inline constexpr std::array<double, 11> kronrod_nodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};

inline constexpr std::array<double, 11> kronrod_weights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208814748987, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7, 9.
inline constexpr std::array<double, 5> gauss_weights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment gk21(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = fc * kronrod_weights[10];
  double gauss = 0;
  for (int j = 0; j < 10; ++j) {
    const double dx = h * kronrod_nodes[j];
    const double pair = f(c - dx) + f(c + dx);
    kronrod += kronrod_weights[j] * pair;
    if (j % 2 == 1) gauss += gauss_weights[j / 2] * pair;
  }
  kronrod *= h;
  gauss *= h;
  if (!std::isfinite(kronrod))
    evtcvar::detail::raise<NumericError>("quad::integrate", "non-finite integrand value");
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Adaptive integration of f over [a, b] to max(abs_tol, rel_tol |I|).
/// Throws NumericError when the subdivision budget is exhausted.
template <class F>
Result integrate(F&& f, double a, double b, double abs_tol, double rel_tol = 1e-12,
                 long max_subdivisions = 1000000) {
  if (a == b) return {};
  std::priority_queue<detail::Segment> work;
  work.push(detail::gk21(f, a, b));
  double total = work.top().value;
  double err = work.top().error;
  double settled_err = 0;
  long intervals = 1;
  for (;;) {
    const double target = std::max(abs_tol, rel_tol * std::abs(total));
    if (err <= target) return {total, err, intervals};
    if (work.empty() || settled_err > target)
      evtcvar::detail::raise<NumericError>("quad::integrate",
                                           "round-off limits accuracy; error estimate " + std::to_string(err));
    if (intervals >= max_subdivisions)
      evtcvar::detail::raise<NumericError>("quad::integrate",
                                           "subdivision limit reached; error estimate " + std::to_string(err));
    const detail::Segment worst = work.top();
    work.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        std::abs(worst.b - worst.a) <= 8 * std::numeric_limits<double>::epsilon() * std::abs(mid)) {
      // Too narrow to bisect; its error estimate stays in the total.
      settled_err += worst.error;
      continue;
    }
    const detail::Segment left = detail::gk21(f, worst.a, mid);
    const detail::Segment right = detail::gk21(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    work.push(left);
    work.push(right);
    ++intervals;
  }
}

/// int_0^b f(s) ds for f with an integrable singularity at 0.
///
/// Substitutes s = b exp(-z) and integrates over z in [0, inf) on doubling
/// chunks [0,1], [1,2], [2,4], ... The integrand is called as f(s) with s
/// computed directly from z, so no cancellation occurs near the singularity.
template <class F>
Result integrate_from_zero(F&& f, double b, double abs_tol, double rel_tol = 1e-12,
                           long max_subdivisions = 1000000) {
  if (!(b > 0)) evtcvar::detail::raise<DomainError>("quad::integrate_from_zero", "upper limit must be > 0");
  auto g = [&](double z) {
    const double s = b * std::exp(-z);
    return s == 0 ? 0.0 : f(s) * s;
  };
  Result out;
  // Beyond z_end, s underflows to a subnormal and the remaining mass is negligible.
  const double z_end = std::log(b / std::numeric_limits<double>::min());
  double lo = 0, hi = std::min(1.0, z_end);
  double chunk_tol = 0.5 * abs_tol;
  for (int k = 0;; ++k) {
    const Result r = integrate(g, lo, hi, chunk_tol, rel_tol, max_subdivisions);
    out.value += r.value;
    out.error += r.error;
    out.intervals += r.intervals;
    const bool negligible = std::abs(r.value) <= 0.25 * chunk_tol + rel_tol * std::abs(out.value);
    if (k >= 3 && negligible) break;
    if (hi >= z_end) {
      if (negligible) break;
      evtcvar::detail::raise<NumericError>("quad::integrate_from_zero",
                                           "integrand decays too slowly near the singular endpoint");
    }
    lo = hi;
    hi = std::min(2 * hi, z_end);
    chunk_tol *= 0.5;
  }
  return out;
}

/// Convenience wrapper taking a Tolerances record.
template <class F>
Result integrate(F&& f, double a, double b, const Tolerances& tol) {
  return integrate(std::forward<F>(f), a, b, tol.quadrature_abs, tol.quadrature_rel, tol.max_subdivisions);
}

template <class F>
Result integrate_from_zero(F&& f, double b, const Tolerances& tol) {
  return integrate_from_zero(std::forward<F>(f), b, tol.quadrature_abs, tol.quadrature_rel, tol.max_subdivisions);
}

}  // namespace evtcvar::quad
