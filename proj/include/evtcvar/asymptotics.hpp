#pragma once

// Closed-form first-order limit functions, the covariance kernel of the
// limit CVaR process, and the asymptotic variances built from it.
//
// Everything here is a pure function templated on the scalar type. The
// gamma -> 0 limits are reached through expm1 so that no threshold is
// needed: the exact log branches are taken only when gamma == 0.

#include <cmath>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "evtcvar/errors.hpp"
#include "evtcvar/types.hpp"

namespace evtcvar {

template <typename Scalar>
using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;
template <typename Scalar>
using Vector4 = Eigen::Matrix<Scalar, 4, 1>;

namespace detail {

// (exp(-gamma * x) - 1) / gamma, with the limit -x at gamma == 0.
template <typename Scalar>
Scalar expm1_ratio(Scalar gamma, Scalar x) {
  using std::expm1;
  if (gamma == Scalar(0)) return -x;
  return expm1(-gamma * x) / gamma;
}

template <typename Scalar>
void require_positive(Scalar y, const char* where) {
  if (!(y > Scalar(0))) raise<DomainError>(where, "argument must be > 0");
}

}  // namespace detail

/// h_gamma(y) = (y^-gamma - 1) / gamma, read as -log y for gamma == 0.
template <typename Scalar>
Scalar h_gamma(Scalar y, ShapeParams<Scalar> g) {
  using std::log;
  detail::require_positive(y, "h_gamma");
  return detail::expm1_ratio(g.gamma, log(y));
}

/// The CVaR counterpart of h_gamma: (y^-gamma - 1) / (gamma (1 - gamma)).
template <typename Scalar>
Scalar h_tilde_gamma(Scalar y, ShapeParams<Scalar> g) {
  using std::log;
  detail::require_positive(y, "h_tilde_gamma");
  g.require_cvar("h_tilde_gamma");
  return detail::expm1_ratio(g.gamma, log(y)) / (Scalar(1) - g.gamma);
}

/// g(v, uv) = (v^-gamma - (uv)^-gamma) / (gamma (1 - gamma)); log u at gamma == 0.
/// This is the limit of the denominator spacing (Y_[vm] - Y_[uvm]) / a(n/m).
template <typename Scalar>
Scalar g_factor(Scalar u, Scalar v, ShapeParams<Scalar> g) {
  using std::log;
  using std::pow;
  detail::require_positive(u, "g_factor");
  detail::require_positive(v, "g_factor");
  g.require_cvar("g_factor");
  const Scalar gamma = g.gamma;
  return -pow(v, -gamma) * detail::expm1_ratio(gamma, log(u)) / (Scalar(1) - gamma);
}

/// Variance of the limit process at t: 2 t^(-2 gamma - 1) / ((1 - gamma)(1 - 2 gamma)).
template <typename Scalar>
Scalar limit_variance(Scalar t, ShapeParams<Scalar> g) {
  using std::pow;
  detail::require_positive(t, "limit_variance");
  g.require_finite_variance("limit_variance");
  const Scalar gamma = g.gamma;
  if (gamma == Scalar(0)) return Scalar(2) / t;
  return Scalar(2) / ((Scalar(1) - gamma) * (Scalar(1) - Scalar(2) * gamma)) * pow(t, -Scalar(2) * gamma - Scalar(1));
}

/// Cov(B~(t1), B~(t2)) for B~(t) = (1/t) int_0^t s^(-gamma-1) W(s) ds.
///
/// With a = min(t1, t2), b = max(t1, t2) the closed form is rearranged as
///   a^(1-2 gamma) / (t1 t2 (1 - gamma)) * [2/(1 - 2 gamma) - ((b/a)^-gamma - 1)/gamma]
/// which is continuous through gamma = 0 and exactly symmetric.
template <typename Scalar>
Scalar cov_kernel(Scalar t1, Scalar t2, ShapeParams<Scalar> g) {
  using std::log;
  using std::pow;
  detail::require_positive(t1, "cov_kernel");
  detail::require_positive(t2, "cov_kernel");
  g.require_finite_variance("cov_kernel");
  const Scalar gamma = g.gamma;
  const Scalar a = t1 < t2 ? t1 : t2;
  const Scalar b = t1 < t2 ? t2 : t1;
  if (a == b) return limit_variance(a, g);
  const Scalar bracket = Scalar(2) / (Scalar(1) - Scalar(2) * gamma) - detail::expm1_ratio(gamma, log(b / a));
  const Scalar lead = gamma == Scalar(0) ? Scalar(1) : pow(a, -Scalar(2) * gamma);
  return lead * bracket / (b * (Scalar(1) - gamma));
}

/// Cov(B(t1), B(t2)) for the quantile-process limit B(t) = t^(-gamma-1) W(t).
template <typename Scalar>
Scalar var_process_cov_kernel(Scalar t1, Scalar t2, ShapeParams<Scalar> g) {
  using std::pow;
  detail::require_positive(t1, "var_process_cov_kernel");
  detail::require_positive(t2, "var_process_cov_kernel");
  const Scalar lo = t1 < t2 ? t1 : t2;
  return pow(t1 * t2, -g.gamma - Scalar(1)) * lo;
}

/// Grid (1, u, v, uv) on which both Pickands-type statistics are evaluated.
template <typename Scalar>
Vector4<Scalar> spacing_grid(Scalar u, Scalar v) {
  return Vector4<Scalar>(Scalar(1), u, v, u * v);
}

/// Contrast c = (1, -1, -v^gamma, v^gamma) applied to the process on the grid.
template <typename Scalar>
Vector4<Scalar> spacing_contrast(Scalar v, ShapeParams<Scalar> g) {
  using std::pow;
  const Scalar vg = pow(v, g.gamma);
  return Vector4<Scalar>(Scalar(1), Scalar(-1), -vg, vg);
}

/// Sigma_ij = cov_kernel(grid_i, grid_j).
template <typename Scalar>
Matrix4<Scalar> cvar_covariance_matrix(Scalar u, Scalar v, ShapeParams<Scalar> g) {
  const Vector4<Scalar> t = spacing_grid(u, v);
  Matrix4<Scalar> sigma;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) sigma(i, j) = sigma(j, i) = cov_kernel(t(i), t(j), g);
  return sigma;
}

template <typename Scalar>
Matrix4<Scalar> var_covariance_matrix(Scalar u, Scalar v, ShapeParams<Scalar> g) {
  const Vector4<Scalar> t = spacing_grid(u, v);
  Matrix4<Scalar> sigma;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) sigma(i, j) = sigma(j, i) = var_process_cov_kernel(t(i), t(j), g);
  return sigma;
}

/// sigma^2_gamma(u, v): variance of B~(1) - B~(u) - v^gamma (B~(v) - B~(uv)),
/// evaluated as the quadratic form c' Sigma c.
template <typename Scalar>
Scalar cvar_pickands_sigma2(Scalar u, Scalar v, ShapeParams<Scalar> g) {
  g.require_finite_variance("cvar_pickands_sigma2");
  const Vector4<Scalar> c = spacing_contrast(v, g);
  return c.dot(cvar_covariance_matrix(u, v, g) * c);
}

/// Asymptotic variance of sqrt(m) (gamma_hat - gamma) for the CVaR-based
/// Pickands estimator: sigma^2 / (v^(2 gamma) log^2 v g^2(v, uv)).
template <typename Scalar>
Scalar cvar_pickands_av(Scalar u, Scalar v, ShapeParams<Scalar> g) {
  using std::log;
  using std::pow;
  if (!(u > Scalar(0)) || !(v > Scalar(0)) || u == Scalar(1) || v == Scalar(1))
    detail::raise<DomainError>("cvar_pickands_av", "u, v must be > 0 and != 1");
  g.require_finite_variance("cvar_pickands_av");
  const Scalar s2 = cvar_pickands_sigma2(u, v, g);
  const Scalar gf = g_factor(u, v, g);
  const Scalar lv = log(v);
  return s2 / (pow(v, Scalar(2) * g.gamma) * lv * lv * gf * gf);
}

inline double cvar_pickands_av(const SpacingSpec& spec, ShapeParams<double> g) {
  spec.validate();
  return cvar_pickands_av(spec.u, spec.v, g);
}

/// Asymptotic variance of the generalized (Yun) estimator built from
/// ordinary order statistics: the same delta-method argument applied to the
/// quantile process B(t) = t^(-gamma-1) W(t). Valid for every real gamma.
template <typename Scalar>
Scalar yun_av(Scalar u, Scalar v, ShapeParams<Scalar> g) {
  using std::log;
  using std::pow;
  if (!(u > Scalar(0)) || !(v > Scalar(0)) || u == Scalar(1) || v == Scalar(1))
    detail::raise<DomainError>("yun_av", "u, v must be > 0 and != 1");
  const Vector4<Scalar> c = spacing_contrast(v, g);
  const Scalar s2 = c.dot(var_covariance_matrix(u, v, g) * c);
  // limit of (X_[vm] - X_[uvm]) / a(n/m)
  const Scalar denom = -pow(v, -g.gamma) * detail::expm1_ratio(g.gamma, log(u));
  const Scalar lv = log(v);
  return s2 / (pow(v, Scalar(2) * g.gamma) * lv * lv * denom * denom);
}

/// Classical Pickands (u = v = 2) asymptotic variance
///   gamma^2 (2^(2 gamma + 1) + 1) / (2 (2^gamma - 1) log 2)^2,
/// with limit 3 / (4 log^4 2) at gamma = 0.
template <typename Scalar>
Scalar pickands_reference_av(ShapeParams<Scalar> g) {
  using std::expm1;
  using std::log;
  using std::pow;
  const Scalar ln2 = log(Scalar(2));
  const Scalar gamma = g.gamma;
  // gamma / (2^gamma - 1)
  const Scalar q = gamma == Scalar(0) ? Scalar(1) / ln2 : gamma / expm1(gamma * ln2);
  const Scalar r = q / (Scalar(2) * ln2);
  return r * r * (pow(Scalar(2), Scalar(2) * gamma + Scalar(1)) + Scalar(1));
}

/// sigma^2_gamma(u, v) exactly as the closed-form display reads, i.e. with
/// "+ v^(2 gamma) sigma(v, uv)" in the cross terms and no factor 2 on the
/// gamma = 0 diagonal. Only used to report the gap to the quadratic form.
template <typename Scalar>
Scalar printed_sigma2(Scalar u, Scalar v, ShapeParams<Scalar> g) {
  using std::pow;
  g.require_finite_variance("printed_sigma2");
  const Scalar gamma = g.gamma;
  const Scalar vg = pow(v, gamma);
  const Scalar cross = Scalar(2) * (-cov_kernel(Scalar(1), u, g) - vg * cov_kernel(Scalar(1), v, g) +
                                    vg * cov_kernel(Scalar(1), u * v, g) + vg * cov_kernel(u, v, g) -
                                    vg * cov_kernel(u, u * v, g) + vg * vg * cov_kernel(v, u * v, g));
  Scalar diag;
  if (gamma == Scalar(0)) {
    diag = (Scalar(1) + Scalar(1) / u) * (Scalar(1) + Scalar(1) / v);
  } else {
    diag = Scalar(2) / ((Scalar(1) - gamma) * (Scalar(1) - Scalar(2) * gamma)) * (Scalar(1) + Scalar(1) / v) *
           (Scalar(1) + pow(u, -Scalar(2) * gamma - Scalar(1)));
  }
  return diag + cross;
}

/// Side-by-side comparison of the quadratic-form variance and the printed display.
template <typename Scalar>
struct VarianceDiscrepancy {
  Scalar quadratic_form;
  Scalar printed;
  Scalar relative_gap;
};

template <typename Scalar>
VarianceDiscrepancy<Scalar> sigma2_discrepancy(Scalar u, Scalar v, ShapeParams<Scalar> g) {
  using std::abs;
  const Scalar qf = cvar_pickands_sigma2(u, v, g);
  const Scalar pr = printed_sigma2(u, v, g);
  return {qf, pr, abs(pr - qf) / abs(qf)};
}

/// Smallest eigenvalue of a symmetric matrix.
template <typename Derived>
typename Derived::Scalar min_eigenvalue(const Eigen::MatrixBase<Derived>& m) {
  using Plain = typename Derived::PlainObject;
  Eigen::SelfAdjointEigenSolver<Plain> solver(m.eval(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

/// PSD check scaled by the matrix magnitude.
template <typename Derived>
bool is_positive_semidefinite(const Eigen::MatrixBase<Derived>& m, typename Derived::Scalar tol) {
  using std::abs;
  const auto scale = m.cwiseAbs().maxCoeff();
  return min_eigenvalue(m) >= -tol * (scale > 0 ? scale : 1);
}

}  // namespace evtcvar
