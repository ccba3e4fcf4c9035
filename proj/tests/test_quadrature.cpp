#include <doctest.h>

#include <cmath>
#include <numbers>

#include "evtcvar/quadrature.hpp"

using namespace evtcvar;
using doctest::Approx;

TEST_CASE("single GK21 panel is exact on polynomials") {
  // Kronrod rule is exact through degree 31, the embedded Gauss rule through 19.
  auto p30 = [](double x) { return std::pow(x, 30); };
  const auto k = quad::detail::gk21(p30, -1.0, 1.0);
  CHECK(k.value == Approx(2.0 / 31.0).epsilon(1e-14));
  auto p18 = [](double x) { return std::pow(x, 18); };
  const auto g = quad::detail::gk21(p18, -1.0, 1.0);
  CHECK(g.value == Approx(2.0 / 19.0).epsilon(1e-14));
  CHECK(g.error < 1e-14);
}

TEST_CASE("adaptive integration of smooth and oscillatory integrands") {
  auto r = quad::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-13);
  CHECK(r.value == Approx(2.0).epsilon(1e-13));
  r = quad::integrate([](double x) { return std::cos(50 * x); }, 0.0, 1.0, 1e-13);
  CHECK(r.value == Approx(std::sin(50.0) / 50.0).epsilon(1e-11));
  CHECK(quad::integrate([](double) { return 1.0; }, 2.0, 2.0, 1e-9).value == 0.0);
}

TEST_CASE("integrable endpoint singularities") {
  auto r = quad::integrate_from_zero([](double s) { return 1.0 / std::sqrt(s); }, 1.0, 1e-12);
  CHECK(r.value == Approx(2.0).epsilon(1e-11));
  r = quad::integrate_from_zero([](double s) { return -std::log(s); }, 1.0, 1e-12);
  CHECK(r.value == Approx(1.0).epsilon(1e-11));
  r = quad::integrate_from_zero([](double s) { return std::pow(s, -0.9); }, 2.0, 1e-10);
  CHECK(r.value == Approx(10.0 * std::pow(2.0, 0.1)).epsilon(1e-9));
}

TEST_CASE("failure is reported, never a silent NaN") {
  CHECK_THROWS_AS((quad::integrate([](double) { return std::nan(""); }, 0.0, 1.0, 1e-9)), NumericError);
  CHECK_THROWS_AS((quad::integrate([](double x) { return 1.0 / x; }, -1.0, 1.0, 1e-9, 1e-12, 50)), NumericError);
  CHECK_THROWS_AS((quad::integrate_from_zero([](double s) { return 1.0 / s; }, 1.0, 1e-9)), NumericError);
  CHECK_THROWS_AS((quad::integrate_from_zero([](double) { return 1.0; }, 0.0, 1e-9)), DomainError);
}
