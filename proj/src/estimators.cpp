#include "evtcvar/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "evtcvar/errors.hpp"

namespace evtcvar {

DescendingOrderView top_k_descending(std::span<const double> sample, std::size_t k) {
  const std::size_t n = sample.size();
  if (k < 1 || k > n)
    detail::raise<DomainError>("top_k_descending",
                               "k = " + std::to_string(k) + " must lie in [1, " + std::to_string(n) + "]");
  for (double x : sample)
    if (!std::isfinite(x)) detail::raise<DataError>("top_k_descending", "sample contains a non-finite value");
  std::vector<double> buf(sample.begin(), sample.end());
  if (k < n) {
    std::nth_element(buf.begin(), buf.begin() + std::ptrdiff_t(k - 1), buf.end(), std::greater<>());
    buf.resize(k);
  }
  std::sort(buf.begin(), buf.end(), std::greater<>());
  return {std::move(buf), n};
}

DescendingOrderView make_descending_view(std::vector<double> values, std::size_t n_total) {
  if (values.size() > n_total) detail::raise<DomainError>("make_descending_view", "more values than n_total");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) detail::raise<DataError>("make_descending_view", "non-finite value");
    if (i > 0 && values[i] > values[i - 1])
      detail::raise<DataError>("make_descending_view", "values are not in nonincreasing order");
  }
  return {std::move(values), n_total};
}

CvarOrderView cvar_order_stats(const DescendingOrderView& view) {
  if (view.values.empty()) detail::raise<DomainError>("cvar_order_stats", "empty view");
  CvarOrderView out{std::vector<double>(view.values.size()), view.n_total};
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < view.values.size(); ++i) {
    const double x = view.values[i];
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
    out.values[i] = (sum + comp) / double(i + 1);
  }
  // Rounding in the division can break monotonicity at ties; restore it.
  for (std::size_t i = 1; i < out.values.size(); ++i) out.values[i] = std::min(out.values[i], out.values[i - 1]);
  return out;
}

namespace {

template <class View>
double spacing_log_ratio(const View& view, const SpacingSpec& spec, const char* where) {
  const SpacingIndices idx = spec.indices_for(view.n_total);
  if (idx.max() > view.k_avail())
    detail::raise<DomainError>(where, "view holds " + std::to_string(view.k_avail()) + " values, need " +
                                          std::to_string(idx.max()));
  const double num = view[idx.m] - view[idx.um];
  const double den = view[idx.vm] - view[idx.uvm];
  if (den == 0.0 || num == 0.0)
    detail::raise<DegenerateSampleError>(where, "zero spacing between order statistics");
  const double ratio = num / den;
  if (!(ratio > 0.0) || !std::isfinite(ratio))
    detail::raise<DegenerateSampleError>(where, "spacing ratio is not positive");
  return std::log(ratio) / std::log(spec.v);
}

}  // namespace

double yun_estimate(const DescendingOrderView& view, const SpacingSpec& spec) {
  return spacing_log_ratio(view, spec, "yun_estimate");
}

double yun_estimate(std::span<const double> sample, const SpacingSpec& spec) {
  const SpacingIndices idx = spec.indices_for(sample.size());
  return yun_estimate(top_k_descending(sample, idx.max()), spec);
}

double pickands_estimate(std::span<const double> sample, std::size_t m) {
  if (m < 1 || 4 * m > sample.size())
    detail::raise<DomainError>("pickands_estimate", "m must lie in [1, n/4]");
  return yun_estimate(sample, SpacingSpec{2.0, 2.0, m});
}

double cvar_pickands_estimate(const CvarOrderView& view, const SpacingSpec& spec) {
  return spacing_log_ratio(view, spec, "cvar_pickands_estimate");
}

double cvar_pickands_estimate(const DescendingOrderView& view, const SpacingSpec& spec) {
  return cvar_pickands_estimate(cvar_order_stats(view), spec);
}

double cvar_pickands_estimate(std::span<const double> sample, const SpacingSpec& spec) {
  const SpacingIndices idx = spec.indices_for(sample.size());
  return cvar_pickands_estimate(top_k_descending(sample, idx.max()), spec);
}

}  // namespace evtcvar
