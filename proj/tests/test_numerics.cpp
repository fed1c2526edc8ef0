#include <doctest.h>

#include <cmath>

#include "hss/numerics.hpp"

using hss::central_diff;
using hss::cumulative_integral;
using hss::Grid;
using hss::integrate_adaptive;
using hss::positive_part_integral;
using hss::Series;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("integrate_adaptive examples") {
  CHECK(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, kPi,
                           1e-12) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(integrate_adaptive([](double) { return 0.0; }, 0.0, 1.0, 1e-10) == 0.0);

  // int_0^5 e^{-s} cos(2 s) ds, closed-form antiderivative.
  const double lam = 1.0, delta = 2.0, b = 5.0;
  const double expected =
      (lam + std::exp(-b * lam) * (delta * std::sin(b * delta) -
                                   lam * std::cos(b * delta))) /
      (lam * lam + delta * delta);
  CHECK(integrate_adaptive(
            [&](double s) { return std::exp(-lam * s) * std::cos(delta * s); },
            0.0, b, 1e-12) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("integrate_adaptive hits the subdivision cap on a singularity") {
  CHECK_THROWS_AS(integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); },
                                     0.0, 1.0, 1e-6),
                  hss::SubdivisionLimit);
}

TEST_CASE("integrate_adaptive is linear") {
  auto f = [](double x) { return std::exp(-x) * std::sin(3.0 * x); };
  auto g = [](double x) { return std::cos(x) + 0.5 * x; };
  const double tol = 1e-10;
  const double lhs = integrate_adaptive(
      [&](double x) { return 2.0 * f(x) - 3.0 * g(x); }, 0.0, 2.0, tol);
  const double rhs = 2.0 * integrate_adaptive(f, 0.0, 2.0, tol) -
                     3.0 * integrate_adaptive(g, 0.0, 2.0, tol);
  CHECK(std::abs(lhs - rhs) <= 2.0 * tol + 5e-10);
}

TEST_CASE("cumulative_integral") {
  const Grid g(0.0, 0.1, 11);
  Series ones(g, Eigen::ArrayXd::Ones(11));
  const Series c = cumulative_integral(ones);
  CHECK(c.values(0) == 0.0);
  for (int i = 0; i <= 10; ++i) {
    CHECK(c.values(i) == doctest::Approx(0.1 * i).epsilon(1e-13));
  }

  // Linear integrand: trapezoid exact.
  Series ramp(g, g.times());
  const Series c2 = cumulative_integral(ramp);
  for (int i = 0; i <= 10; ++i) {
    const double t = g.time(i);
    CHECK(c2.values(i) == doctest::Approx(0.5 * t * t).epsilon(1e-13));
  }

  Eigen::ArrayXd alt(11);
  for (int i = 0; i < 11; ++i) alt(i) = (i % 2 == 0) ? 1.0 : -1.0;
  const Series c3 = cumulative_integral(Series(g, alt));
  CHECK(c3.values.abs().maxCoeff() <= 0.1);
}

TEST_CASE("cumulative_adaptive matches direct quadrature") {
  const Grid g(0.0, 0.05, 41);
  const auto f = [](double s) { return std::exp(-s) * std::cos(4.0 * s); };
  const Series c = hss::cumulative_adaptive(f, g);
  for (Eigen::Index i = 0; i < g.n; i += 8) {
    CHECK(c.values(i) ==
          doctest::Approx(integrate_adaptive(f, 0.0, g.time(i), 1e-12))
              .epsilon(1e-9));
  }
}

TEST_CASE("central_diff") {
  const Grid g(0.0, 0.01, 101);
  Series lin(g, 2.0 * g.times());
  const Series d = central_diff(lin);
  for (Eigen::Index i = 0; i < g.n; ++i) {
    CHECK(d.values(i) == doctest::Approx(2.0).epsilon(1e-12));
  }

  const Grid gs(0.0, 1e-3, 2001);
  Series sine(gs, gs.times().sin());
  const Series ds = central_diff(sine);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < gs.n; ++i) {
    worst = std::max(worst, std::abs(ds.values(i) - std::cos(gs.time(i))));
  }
  CHECK(worst < 1e-6);

  Series flat(g, Eigen::ArrayXd::Constant(101, 3.5));
  CHECK(central_diff(flat).values.abs().maxCoeff() <= 1e-12);
}

TEST_CASE("central_diff undoes cumulative_integral at interior points") {
  const Grid g(0.0, 1e-3, 3001);
  Series s(g, (2.0 * g.times()).cos());
  const Series back = central_diff(cumulative_integral(s));
  double worst = 0.0;
  for (Eigen::Index i = 1; i + 1 < g.n; ++i) {
    worst = std::max(worst, std::abs(back.values(i) - s.values(i)));
  }
  CHECK(worst < 5e-6);  // O(dt^2)
}

TEST_CASE("positive_part_integral") {
  const Grid g(0.0, 1e-3, 6284);  // ~[0, 2*pi]
  Series sine(g, g.times().sin());
  CHECK(positive_part_integral(sine) == doctest::Approx(2.0).epsilon(1e-4));

  Series neg(g, Eigen::ArrayXd::Constant(g.n, -2.0));
  CHECK(positive_part_integral(neg) == 0.0);

  const Grid g2(0.0, 0.01, 101);
  Series one(g2, Eigen::ArrayXd::Ones(101));
  CHECK(positive_part_integral(one) == doctest::Approx(1.0).epsilon(1e-12));

  // ppi(s) <= ppi(|s|), equality when s >= 0.
  Eigen::ArrayXd mixed(g2.n);
  for (Eigen::Index i = 0; i < g2.n; ++i) mixed(i) = std::sin(7.0 * g2.time(i));
  const Series sm(g2, mixed);
  const Series sa(g2, mixed.abs());
  CHECK(positive_part_integral(sm) <= positive_part_integral(sa) + 1e-15);
  CHECK(positive_part_integral(sa) ==
        doctest::Approx(positive_part_integral(Series(g2, mixed.abs()))));
}

TEST_CASE("Grid and Series validation") {
  CHECK_THROWS_AS(Grid(0.0, -1.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(Grid(0.0, 0.1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Series(Grid(0.0, 0.1, 5), Eigen::ArrayXd::Zero(4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate_adaptive([](double) { return 1.0; }, 1.0, 0.0, 1e-8),
                  std::invalid_argument);
}
