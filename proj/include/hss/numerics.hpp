#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <utility>

#include "hss/errors.hpp"
#include "hss/tolerances.hpp"

namespace hss {

/// Uniform time grid: t_i = t0 + i*dt for i in [0, n). Needs n >= 3 so
/// central differences have interior points.
struct Grid {
  Grid(double t0_, double dt_, Eigen::Index n_) : t0(t0_), dt(dt_), n(n_) {
    if (!(dt > 0.0)) throw std::invalid_argument("Grid: dt must be > 0");
    if (n < 3) throw std::invalid_argument("Grid: n must be >= 3");
  }
  double time(Eigen::Index i) const { return t0 + static_cast<double>(i) * dt; }
  Eigen::ArrayXd times() const {
    Eigen::ArrayXd out(n);
    for (Eigen::Index i = 0; i < n; ++i) out(i) = time(i);
    return out;
  }
  double t0;
  double dt;
  Eigen::Index n;
};

inline bool same_grid(const Grid& a, const Grid& b) {
  return a.n == b.n && std::abs(a.t0 - b.t0) <= 1e-12 &&
         std::abs(a.dt - b.dt) <= 1e-12 * std::max(1.0, a.dt);
}

/// Scalar samples on a uniform grid.
struct Series {
  Series(Grid g, Eigen::ArrayXd v) : grid(std::move(g)), values(std::move(v)) {
    if (values.size() != grid.n) {
      throw std::invalid_argument("Series: length must match grid");
    }
  }
  Grid grid;
  Eigen::ArrayXd values;
};

namespace detail {

template <class F>
double adaptive_step(F& f, double a, double fa, double b, double fb, double m,
                     double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  if (depth <= 0) {
    throw SubdivisionLimit("integrate_adaptive: recursion depth cap reached");
  }
  return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive-Simpson quadrature of f over [a, b] with absolute error target
/// tol. Deterministic for fixed inputs; recursion capped at
/// tol::kQuadMaxDepth levels (SubdivisionLimit beyond that).
template <class F>
double integrate_adaptive(F&& f, double a, double b, double tol) {
  if (!(a <= b)) throw std::invalid_argument("integrate_adaptive: need a <= b");
  if (!(tol > 0.0)) throw std::invalid_argument("integrate_adaptive: tol must be > 0");
  if (a == b) return 0.0;
  auto& fn = f;
  const double m = 0.5 * (a + b);
  const double fa = fn(a), fb = fn(b), fm = fn(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::adaptive_step(fn, a, fa, b, fb, m, fm, whole, tol,
                               tol::kQuadMaxDepth);
}

/// Composite-trapezoid running integral on the sample grid; first value 0.
Series cumulative_integral(const Series& samples);

/// Adaptive running integral of a smooth function along a grid: each step
/// [t_i, t_{i+1}] is integrated to per_step_tol and accumulated. First
/// value 0.
Series cumulative_adaptive(const std::function<double(double)>& f,
                           const Grid& grid,
                           double per_step_tol = tol::kQuadStepTol);

/// Second-order derivative estimate: symmetric differences at interior
/// points, one-sided three-point formulas at the ends. Same grid.
Series central_diff(const Series& samples);

/// Trapezoid integral of max(value, 0); samples are clipped before
/// integrating.
double positive_part_integral(const Series& samples);

}  // namespace hss
