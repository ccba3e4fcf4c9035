#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "evtcvar/distributions.hpp"
#include "evtcvar/estimators.hpp"

using namespace evtcvar;
using doctest::Approx;

namespace {

// Descending power-law order statistics X_i = (i^-g - 1) / g.
std::vector<double> power_law(double g, std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 1; i <= n; ++i) x[i - 1] = (std::pow(double(i), -g) - 1.0) / g;
  return x;
}

// Values whose CVaR order statistics are exactly Y_k = V(k/n) for GPD(g).
std::vector<double> from_cvar_curve(double g, std::size_t n, std::size_t k) {
  const TailModel model{Family::gpd, g};
  std::vector<double> x(k);
  double prev = 0.0;
  for (std::size_t i = 1; i <= k; ++i) {
    const double cur = double(i) * model.cvar_curve_V(double(i) / double(n));
    x[i - 1] = cur - prev;
    prev = cur;
  }
  return x;
}

std::vector<double> affine(const std::vector<double>& x, double a, double b) {
  std::vector<double> y(x.size());
  std::transform(x.begin(), x.end(), y.begin(), [=](double v) { return a * v + b; });
  return y;
}

}  // namespace

TEST_CASE("top_k_descending") {
  const std::vector<double> a{1, 3, 5};
  CHECK(top_k_descending(a, 3).values == std::vector<double>{5, 3, 1});
  CHECK(top_k_descending(a, 3).n_total == 3);
  const std::vector<double> b{2, 2, 2, 2};
  CHECK(top_k_descending(b, 2).values == std::vector<double>{2, 2});
  CHECK_THROWS_AS(top_k_descending(a, 4), DomainError);
  CHECK_THROWS_AS(top_k_descending(a, 0), DomainError);
  const std::vector<double> bad{1, std::nan(""), 2};
  CHECK_THROWS_AS(top_k_descending(bad, 1), DataError);

  const auto u = sample(TailModel{Family::gpd, -1.0}, 1000000, 11).values;
  auto sorted = u;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  sorted.resize(400);
  CHECK(top_k_descending(u, 400).values == sorted);
}

TEST_CASE("cvar_order_stats") {
  CHECK(cvar_order_stats({{5, 3, 1}, 3}).values == std::vector<double>{5, 4, 3});
  CHECK(cvar_order_stats({{7}, 1}).values == std::vector<double>{7});
  CHECK(cvar_order_stats({{5, 5, -1}, 3}).values == std::vector<double>{5, 5, 3});
  CHECK_THROWS_AS((cvar_order_stats({{}, 0})), DomainError);

  std::mt19937_64 gen(2024);
  std::uniform_int_distribution<int> size(1, 300);
  std::uniform_real_distribution<double> val(-5, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> x(std::size_t(size(gen)));
    for (double& v : x) v = trial % 3 == 0 ? std::round(val(gen)) : val(gen);
    const auto y = cvar_order_stats(top_k_descending(x, x.size()));
    CHECK(y.values.front() == *std::max_element(x.begin(), x.end()));
    CHECK(std::is_sorted(y.values.begin(), y.values.end(), std::greater<>()));
  }
}

TEST_CASE("index validation") {
  const auto x = power_law(0.25, 100);
  CHECK_THROWS_AS((yun_estimate(x, SpacingSpec{2.0, 2.0, 26})), DomainError);
  CHECK_THROWS_AS((yun_estimate(x, SpacingSpec{0.5, 2.0, 1})), DomainError);  // [um] = 0
  CHECK_THROWS_AS((cvar_pickands_estimate(x, SpacingSpec{2.0, 2.0, 26})), DomainError);
  CHECK_NOTHROW((yun_estimate(x, SpacingSpec{2.0, 2.0, 25})));
}

TEST_CASE("pickands m boundary") {
  const auto x = power_law(0.25, 403);
  CHECK(pickands_estimate(x, 100) == Approx(0.25).epsilon(1e-12));
  CHECK_THROWS_AS(pickands_estimate(x, 101), DomainError);
  CHECK_THROWS_AS(pickands_estimate(x, 0), DomainError);
}

TEST_CASE("exact recovery on power-law inputs") {
  for (double g0 : {-1.0, -0.5, 0.25}) {
    CAPTURE(g0);
    const std::size_t n = 4000;
    const auto x = power_law(g0, n);
    for (std::size_t m : {10, 100, 1000}) {
      CHECK(std::abs(pickands_estimate(x, m) - g0) < 1e-10);
      CHECK(std::abs(yun_estimate(x, SpacingSpec{2.0, 2.0, m}) - g0) < 1e-10);
    }
    CHECK(std::abs(yun_estimate(x, SpacingSpec{4.0, 4.0, 100}) - g0) < 1e-10);

    const SpacingSpec spec{2.0, 2.0, 100};
    CvarOrderView y{std::vector<double>(400), n};
    const TailModel model{Family::gpd, g0};
    for (std::size_t k = 1; k <= 400; ++k) y.values[k - 1] = model.cvar_curve_V(double(k) / double(n));
    CHECK(std::abs(cvar_pickands_estimate(y, spec) - g0) < 1e-10);

    std::vector<double> raw = from_cvar_curve(g0, n, 400);
    raw.resize(n, raw.back() - 1.0);  // padding below the top 400
    CHECK(std::abs(cvar_pickands_estimate(raw, spec) - g0) < 1e-10);
  }
}

TEST_CASE("pickands_estimate equals yun_estimate at u = v = 2") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto x = sample(TailModel{Family::gev, 0.1}, 1000, seed).values;
    CHECK(pickands_estimate(x, 50) == yun_estimate(x, SpacingSpec{2.0, 2.0, 50}));
  }
}

TEST_CASE("degenerate spacings raise a typed error") {
  const std::vector<double> constant(1000, 3.0);
  CHECK_THROWS_AS((yun_estimate(constant, SpacingSpec{})), DegenerateSampleError);
  CHECK_THROWS_AS((cvar_pickands_estimate(constant, SpacingSpec{})), DegenerateSampleError);
  try {
    pickands_estimate(constant, 100);
  } catch (const Error& e) {
    CHECK(e.exit_code() == 5);
  }
}

TEST_CASE("location-scale invariance") {
  const auto x = sample(TailModel{Family::gpd, 0.2}, 10000, 9).values;
  const SpacingSpec spec{2.0, 2.0, 100};
  const auto y = affine(x, 2.5, -7.0);
  CHECK(std::abs(cvar_pickands_estimate(y, spec) - cvar_pickands_estimate(x, spec)) < 1e-12);
  const auto z = affine(x, 3.0, 10.0);
  CHECK(std::abs(yun_estimate(z, spec) - yun_estimate(x, spec)) < 1e-12);
}

TEST_CASE("consistency on a GPD sample") {
  const auto x = sample(TailModel{Family::gpd, -0.5}, 10000, 123).values;
  CHECK(std::abs(cvar_pickands_estimate(x, SpacingSpec{2.0, 2.0, 100}) + 0.5) < 0.15);
}
