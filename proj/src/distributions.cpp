#include "evtcvar/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "evtcvar/asymptotics.hpp"
#include "evtcvar/errors.hpp"
#include "evtcvar/quadrature.hpp"
#include "evtcvar/random.hpp"

namespace evtcvar {

std::string_view to_string(Family f) { return f == Family::gev ? "gev" : "gpd"; }

Family parse_family(std::string_view name) {
  if (name == "gev" || name == "GEV") return Family::gev;
  if (name == "gpd" || name == "GPD") return Family::gpd;
  detail::raise<ConfigError>("parse_family", "unknown family '" + std::string(name) + "' (expected gev or gpd)");
}

namespace {

// log(1 - p) without cancellation for small p and without rounding 1 - p
// for p >= 1/2 (where 1 - p is exact).
double log_complement(double p) { return p < 0.5 ? std::log1p(-p) : std::log(1.0 - p); }

void require_probability(double p, const char* where) {
  if (!(p > 0.0 && p < 1.0)) detail::raise<DomainError>(where, "probability must lie in (0, 1)");
}

}  // namespace

double TailModel::quantile(double p) const {
  require_probability(p, "quantile");
  if (family == Family::gpd) return detail::expm1_ratio(gamma, log_complement(p));
  // GEV: ((-log p)^-gamma - 1) / gamma
  const double neg_log_p = p < 0.5 ? -std::log(p) : -std::log1p(-(1.0 - p));
  return detail::expm1_ratio(gamma, std::log(neg_log_p));
}

double TailModel::upper_quantile(double q) const {
  require_probability(q, "upper_quantile");
  if (family == Family::gpd) return detail::expm1_ratio(gamma, std::log(q));
  const double neg_log_p = -log_complement(q);
  return detail::expm1_ratio(gamma, std::log(neg_log_p));
}

double TailModel::tail_quantile_U(double t) const {
  if (!(t > 1.0)) detail::raise<DomainError>("tail_quantile_U", "t must be > 1");
  return upper_quantile(1.0 / t);
}

double TailModel::scale_a(double t) const {
  if (!(t > 1.0)) detail::raise<DomainError>("scale_a", "t must be > 1");
  if (family == Family::gpd) return std::pow(t, gamma);
  // t U'(t) = L^(-gamma-1) / (t - 1) with L = -log(1 - 1/t)
  const double big_l = -std::log1p(-1.0 / t);
  return std::pow(big_l, -gamma - 1.0) / (t - 1.0);
}

double TailModel::cvar_curve_V(double x, const Tolerances& tol) const {
  shape().require_cvar("cvar_curve_V");
  if (!(x > 0.0 && x <= 1.0)) detail::raise<DomainError>("cvar_curve_V", "x must lie in (0, 1]");
  if (family == Family::gpd) return (detail::expm1_ratio(gamma, std::log(x)) + 1.0) / (1.0 - gamma);

  // GEV: integrate U(1/s) = F^-1(1 - s) over (0, x]. The integrand behaves
  // like s^-gamma at 0 and like (-log(1 - s))-powers at 1.
  const double abs_tol = tol.quadrature_abs * x;
  auto upper = [this](double s) { return upper_quantile(s); };
  auto lower = [this](double p) { return quantile(p); };
  double integral;
  if (x <= 0.5) {
    integral = quad::integrate_from_zero(upper, x, abs_tol / 2, tol.quadrature_rel, tol.max_subdivisions).value;
  } else {
    // int_0^{1/2} F^-1(1-s) ds + int_{1-x}^{1/2} F^-1(p) dp, the latter split at p = 0.
    integral = quad::integrate_from_zero(upper, 0.5, abs_tol / 4, tol.quadrature_rel, tol.max_subdivisions).value;
    integral += quad::integrate_from_zero(lower, 0.5, abs_tol / 4, tol.quadrature_rel, tol.max_subdivisions).value;
    const double rest = 1.0 - x;
    if (rest > 0.0)
      integral -= quad::integrate_from_zero(lower, rest, abs_tol / 4, tol.quadrature_rel, tol.max_subdivisions).value;
  }
  return integral / x;
}

SampleBatch sample(const TailModel& model, std::size_t n, std::uint64_t seed) {
  if (n < 1) detail::raise<DomainError>("sample", "n must be >= 1");
  SampleBatch batch;
  batch.seed = seed;
  batch.model = model;
  batch.values.resize(n);
  rng::CounterStream(seed).fill_uniform(n, batch.values.begin());
  for (double& v : batch.values) v = model.quantile(v);
  return batch;
}

std::vector<double> sample_top_k(const TailModel& model, std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k < 1 || k > n) detail::raise<DomainError>("sample_top_k", "k must lie in [1, n]");
  const rng::CounterStream stream(seed);
  std::vector<double> top;

  // Keep only uniforms above a threshold that leaves ~k + 8 sqrt(k) survivors;
  // fall back to the full set when too few survive. Either path selects the
  // same k uniforms.
  const double kd = double(k);
  const double threshold = 1.0 - (kd + 8.0 * std::sqrt(kd) + 16.0) / double(n);
  bool filtered = false;
  if (threshold > 0.0) {
    top.reserve(std::size_t(kd + 8.0 * std::sqrt(kd) + 64.0));
    for (std::uint64_t block = 0, i = 0; i < n; ++block) {
      const auto u = stream.uniform_pair(block);
      if (u[0] > threshold) top.push_back(u[0]);
      if (++i < n) {
        if (u[1] > threshold) top.push_back(u[1]);
        ++i;
      }
    }
    filtered = top.size() >= k;
  }
  if (!filtered) {
    top.resize(n);
    stream.fill_uniform(n, top.begin());
  }
  std::nth_element(top.begin(), top.begin() + std::ptrdiff_t(k - 1), top.end(), std::greater<>());
  top.resize(k);
  for (double& v : top) v = model.quantile(v);
  std::sort(top.begin(), top.end(), std::greater<>());
  return top;
}

}  // namespace evtcvar
