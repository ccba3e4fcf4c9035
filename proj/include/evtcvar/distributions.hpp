#pragma once

// Canonical GEV and GPD tail models: quantiles, the tail quantile function
// U, the CVaR curve V, the auxiliary scale a(t), and seeded sampling.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "evtcvar/config.hpp"
#include "evtcvar/types.hpp"

namespace evtcvar {

enum class Family { gev, gpd };

std::string_view to_string(Family f);
Family parse_family(std::string_view name);

struct TailModel {
  Family family = Family::gpd;
  double gamma = 0.0;

  ShapeParams<double> shape() const { return {gamma}; }

  /// F^-1(p), 0 < p < 1.
  double quantile(double p) const;
  /// F^-1(1 - q) evaluated from the upper-tail probability q, accurate for small q.
  double upper_quantile(double q) const;
  /// U(t) = F^-1(1 - 1/t), t > 1.
  double tail_quantile_U(double t) const;
  /// V(x) = (1/x) int_0^x F^-1(1 - s) ds, 0 < x <= 1, gamma < 1.
  double cvar_curve_V(double x, const Tolerances& tol = {}) const;
  /// a(t) = t U'(t), t > 1.
  double scale_a(double t) const;
};

struct SampleBatch {
  std::vector<double> values;
  std::uint64_t seed = 0;
  TailModel model;
};

/// n draws by inverse transform of the counter-based stream keyed by seed.
SampleBatch sample(const TailModel& model, std::size_t n, std::uint64_t seed);

/// The k largest values of sample(model, n, seed), in nonincreasing order,
/// without materialising the full sample. Quantiles are monotone, so the
/// k largest uniforms map onto the k largest draws.
std::vector<double> sample_top_k(const TailModel& model, std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace evtcvar
