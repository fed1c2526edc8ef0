#include "hss/numerics.hpp"

namespace hss {

Series cumulative_integral(const Series& samples) {
  const auto& v = samples.values;
  const double h = samples.grid.dt;
  Eigen::ArrayXd out(v.size());
  out(0) = 0.0;
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    out(i) = out(i - 1) + 0.5 * h * (v(i - 1) + v(i));
  }
  return Series(samples.grid, std::move(out));
}

Series cumulative_adaptive(const std::function<double(double)>& f,
                           const Grid& grid, double per_step_tol) {
  Eigen::ArrayXd out(grid.n);
  out(0) = 0.0;
  for (Eigen::Index i = 1; i < grid.n; ++i) {
    out(i) = out(i - 1) +
             integrate_adaptive(f, grid.time(i - 1), grid.time(i), per_step_tol);
  }
  return Series(grid, std::move(out));
}

Series central_diff(const Series& samples) {
  const auto& v = samples.values;
  const double h = samples.grid.dt;
  const Eigen::Index n = v.size();
  Eigen::ArrayXd out(n);
  for (Eigen::Index i = 1; i + 1 < n; ++i) {
    out(i) = (v(i + 1) - v(i - 1)) / (2.0 * h);
  }
  out(0) = (-3.0 * v(0) + 4.0 * v(1) - v(2)) / (2.0 * h);
  out(n - 1) = (3.0 * v(n - 1) - 4.0 * v(n - 2) + v(n - 3)) / (2.0 * h);
  return Series(samples.grid, std::move(out));
}

double positive_part_integral(const Series& samples) {
  const Eigen::ArrayXd clipped = samples.values.max(0.0);
  const double h = samples.grid.dt;
  double acc = 0.0;
  for (Eigen::Index i = 1; i < clipped.size(); ++i) {
    acc += 0.5 * h * (clipped(i - 1) + clipped(i));
  }
  return acc;
}

}  // namespace hss
