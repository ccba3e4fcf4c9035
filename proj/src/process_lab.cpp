#include "evtcvar/process_lab.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "evtcvar/asymptotics.hpp"
#include "evtcvar/errors.hpp"
#include "evtcvar/estimators.hpp"
#include "evtcvar/parallel.hpp"
#include "evtcvar/random.hpp"

namespace evtcvar {

ProcessGrid::ProcessGrid(std::vector<double> t_values) : t_(std::move(t_values)) {
  if (t_.empty()) detail::raise<DomainError>("ProcessGrid", "grid must not be empty");
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (!(t_[i] > 0.0) || !std::isfinite(t_[i])) detail::raise<DomainError>("ProcessGrid", "grid points must be > 0");
    if (i > 0 && !(t_[i] > t_[i - 1]))
      detail::raise<DomainError>("ProcessGrid", "grid points must be strictly increasing");
  }
}

void ProcessGrid::validate_for(std::size_t n, std::size_t m) const {
  for (double t : t_) {
    const double mt = double(m) * t;
    if (std::floor(mt) < 1.0)
      detail::raise<DomainError>("ProcessGrid", "grid point t = " + std::to_string(t) + " gives [mt] = 0");
    if (mt > double(n))
      detail::raise<DomainError>("ProcessGrid", "grid point t = " + std::to_string(t) + " exceeds n/m");
  }
}

ProcessPaths empirical_tilde_B(const TailModel& model, std::size_t n, std::size_t m, const ProcessGrid& grid,
                               std::size_t reps, std::uint64_t seed, unsigned workers) {
  model.shape().require_finite_variance("empirical_tilde_B");
  if (m < 1 || m > n) detail::raise<DomainError>("empirical_tilde_B", "need 1 <= m <= n");
  if (reps < 1) detail::raise<DomainError>("empirical_tilde_B", "reps must be >= 1");
  grid.validate_for(n, m);

  const std::size_t cols = grid.size();
  std::vector<std::size_t> index(cols);
  std::vector<double> centre(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    const double mt = double(m) * grid.t()[j];
    index[j] = std::size_t(std::floor(mt));
    centre[j] = model.cvar_curve_V(mt / double(n));
  }
  const std::size_t k = index.back();
  const double scale = std::sqrt(double(m)) / model.scale_a(double(n) / double(m));

  ProcessPaths out{Eigen::MatrixXd(Eigen::Index(reps), Eigen::Index(cols)), model.gamma, m, n, seed};
  parallel_for(reps, workers, [&](std::size_t r) {
    const auto top = sample_top_k(model, n, k, rng::derive_stream_seed(seed, 0, r));
    const CvarOrderView y = cvar_order_stats(DescendingOrderView{top, n});
    for (std::size_t j = 0; j < cols; ++j)
      out.values(Eigen::Index(r), Eigen::Index(j)) = scale * (y[index[j]] - centre[j]);
  });
  return out;
}

double limit_process_epsilon(ShapeParams<double> g, double t_min, double truncation_deficit) {
  g.require_finite_variance("limit_process_epsilon");
  if (!(truncation_deficit > 0.0 && truncation_deficit < 1.0))
    detail::raise<DomainError>("limit_process_epsilon", "truncation deficit must lie in (0, 1)");
  // The omitted bridge part over [0, eps] carries the share
  // (eps/t)^(1 - 2 gamma) / (2 (1 - gamma)) of Var(t B~(t)).
  const double gamma = g.gamma;
  return t_min * std::pow(2.0 * (1.0 - gamma) * truncation_deficit, 1.0 / (1.0 - 2.0 * gamma));
}

namespace {

struct Mesh {
  double eps = 0;
  std::vector<double> sqrt_h;  // per cell
  std::vector<double> w_left;  // weight of W at the left node
  std::vector<double> w_right;
  std::vector<std::size_t> grid_cell;  // cell after which each grid point is reached
};

Mesh build_mesh(double gamma, const std::vector<double>& t, std::size_t steps, double eps) {
  Mesh mesh;
  mesh.eps = eps;
  std::vector<double> knots{eps};
  knots.insert(knots.end(), t.begin(), t.end());
  const double total_log = std::log(t.back() / eps);
  std::vector<double> nodes{eps};
  for (std::size_t seg = 0; seg + 1 < knots.size(); ++seg) {
    const double lo = knots[seg], hi = knots[seg + 1];
    const auto cells = std::max<std::size_t>(1, std::size_t(std::llround(double(steps) * std::log(hi / lo) / total_log)));
    const double ratio = std::log(hi / lo) / double(cells);
    for (std::size_t c = 1; c < cells; ++c) nodes.push_back(lo * std::exp(ratio * double(c)));
    nodes.push_back(hi);
    mesh.grid_cell.push_back(nodes.size() - 2);
  }

  // 4-point Gauss-Legendre on each cell for the weights of the linear interpolant.
  constexpr std::array<double, 4> x = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                                       0.8611363115940526};
  constexpr std::array<double, 4> w = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                                       0.3478548451374538};
  const std::size_t cells = nodes.size() - 1;
  mesh.sqrt_h.resize(cells);
  mesh.w_left.resize(cells);
  mesh.w_right.resize(cells);
  for (std::size_t j = 0; j < cells; ++j) {
    const double a = nodes[j], b = nodes[j + 1], h = b - a;
    double left = 0, right = 0;
    for (int q = 0; q < 4; ++q) {
      const double s = 0.5 * (a + b) + 0.5 * h * x[q];
      const double f = std::pow(s, -gamma - 1.0) * 0.5 * w[q];
      left += f * (b - s);
      right += f * (s - a);
    }
    mesh.sqrt_h[j] = std::sqrt(h);
    mesh.w_left[j] = left;
    mesh.w_right[j] = right;
  }
  return mesh;
}

}  // namespace

ProcessPaths simulate_limit_process(ShapeParams<double> g, const ProcessGrid& grid, std::size_t steps,
                                    std::size_t reps, std::uint64_t seed, unsigned workers,
                                    double truncation_deficit) {
  g.require_finite_variance("simulate_limit_process");
  if (steps < 1000) detail::raise<DomainError>("simulate_limit_process", "steps must be >= 1000");
  if (reps < 1) detail::raise<DomainError>("simulate_limit_process", "reps must be >= 1");

  const double gamma = g.gamma;
  const auto& t = grid.t();
  const double eps = limit_process_epsilon(g, t.front(), truncation_deficit);
  const Mesh mesh = build_mesh(gamma, t, steps, eps);
  const double head_weight = std::pow(eps, -gamma) / (1.0 - gamma);
  const double sqrt_eps = std::sqrt(eps);
  const std::size_t cells = mesh.sqrt_h.size();

  ProcessPaths out{Eigen::MatrixXd(Eigen::Index(reps), Eigen::Index(t.size())), gamma, 0, 0, seed};
  parallel_for(reps, workers, [&](std::size_t r) {
    const rng::CounterStream stream(rng::derive_stream_seed(seed, 1, r), rng::Domain::gaussian);
    std::uint64_t block = 0;
    std::array<double, 2> z = stream.normal_pair(block++);
    int used = 0;
    auto next_normal = [&] {
      if (used == 2) {
        z = stream.normal_pair(block++);
        used = 0;
      }
      return z[used++];
    };
    double w_now = sqrt_eps * next_normal();
    double integral = head_weight * w_now;
    std::size_t col = 0;
    for (std::size_t j = 0; j < cells; ++j) {
      const double w_next = w_now + mesh.sqrt_h[j] * next_normal();
      integral += mesh.w_left[j] * w_now + mesh.w_right[j] * w_next;
      w_now = w_next;
      if (col < t.size() && mesh.grid_cell[col] == j) {
        out.values(Eigen::Index(r), Eigen::Index(col)) = integral / t[col];
        ++col;
      }
    }
  });
  return out;
}

Eigen::MatrixXd empirical_cov(const ProcessPaths& paths) {
  const Eigen::Index reps = paths.values.rows();
  if (reps < 2) detail::raise<DomainError>("empirical_cov", "need at least 2 replications");
  const Eigen::RowVectorXd mean = paths.values.colwise().mean();
  const Eigen::MatrixXd centred = paths.values.rowwise() - mean;
  const Eigen::MatrixXd cov = (centred.transpose() * centred) / double(reps - 1);
  return 0.5 * (cov + cov.transpose());
}

Eigen::MatrixXd kernel_cov(const ProcessGrid& grid, ShapeParams<double> g) {
  const auto& t = grid.t();
  const auto n = Eigen::Index(t.size());
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) k(i, j) = k(j, i) = cov_kernel(t[std::size_t(i)], t[std::size_t(j)], g);
  return k;
}

}  // namespace evtcvar
