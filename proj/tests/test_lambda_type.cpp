#include <doctest.h>

#include <random>

#include "hss/models/lambda_type.hpp"
#include "hss/speed.hpp"
#include "support/test_support.hpp"

using hss::ComplexMatrix;
using hss::DensityMatrix;
using hss::Grid;
using hss::RateProfile;
using namespace hss::models;

namespace {

LambdaParams resonant(double trunc_k = 50.0) {
  return LambdaParams{1.0, 1.0, 200.0, 0.0, 0.0, trunc_k};
}

LambdaParams detuned(double delta) {
  return LambdaParams{1.0, 1.0, 200.0, delta, delta, 50.0};
}

// Running integral of the untruncated Lorentzian Fourier kernel
// (gamma0*lambda/2) e^{-lambda s} cos(delta s), in gamma0 = lambda = 1 units.
double oracle_rate(double delta, double t) {
  return 0.5 *
         (1.0 + std::exp(-t) * (delta * std::sin(delta * t) - std::cos(delta * t))) /
         (1.0 + delta * delta);
}

}  // namespace

TEST_CASE("rates vanish at t = 0") {
  const auto r = lambda_rates(resonant(), 0.0);
  CHECK(r.gamma1 == doctest::Approx(0.0));
  CHECK(r.gamma2 == doctest::Approx(0.0));
  CHECK(r.lambda1 == doctest::Approx(0.0));
  CHECK(r.lambda2 == doctest::Approx(0.0));
}

TEST_CASE("resonant rates approach the untruncated closed form") {
  // The default window (50 widths) leaves a ~5e-5 truncation residual that
  // falls roughly like 1/k^2; an unclipped 500-width window is inside 1e-6
  // of the closed form.
  const Grid grid(0.0, 2e-3, 501);
  const auto dyn_default = LambdaDynamics::from_params(resonant(), grid);
  const LambdaParams wide{1.0, 1.0, 5000.0, 0.0, 0.0, 500.0};
  const auto dyn_wide = LambdaDynamics::from_params(wide, grid);
  double worst_default = 0.0, worst_wide = 0.0;
  for (Eigen::Index i = 0; i < grid.n; ++i) {
    const double expected = oracle_rate(0.0, grid.time(i));
    worst_default =
        std::max(worst_default,
                 std::abs(dyn_default.gamma1().values(i) - expected));
    worst_wide = std::max(worst_wide,
                          std::abs(dyn_wide.gamma1().values(i) - expected));
  }
  CHECK(worst_default < 2e-4);
  CHECK(worst_wide < 1e-6);

  // Monotone nonnegative on resonance.
  for (Eigen::Index i = 1; i < grid.n; ++i) {
    CHECK(dyn_default.gamma1().values(i) >=
          dyn_default.gamma1().values(i - 1) - 1e-12);
  }
}

TEST_CASE("large detuning drives the rates negative") {
  const Grid grid(0.0, 1e-3, 3001);
  const auto dyn = LambdaDynamics::from_params(detuned(8.0), grid);
  CHECK(dyn.gamma1().values.minCoeff() < -1e-3);
  // And the quadrature still tracks the closed form loosely.
  double worst = 0.0;
  for (Eigen::Index i = 0; i < grid.n; i += 100) {
    worst = std::max(worst, std::abs(dyn.gamma1().values(i) -
                                     oracle_rate(8.0, grid.time(i))));
  }
  CHECK(worst < 2e-4);
}

TEST_CASE("evolve: identity at t = 0") {
  const Grid grid(0.0, 1e-3, 101);
  const auto dyn = LambdaDynamics::from_params(resonant(), grid);
  const auto probe = lambda_probe_state(1.3);
  const auto back = lambda_evolve(dyn, probe, 0.0);
  CHECK((back.matrix() - probe.matrix()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("synthetic constant rates reproduce the exponential solution") {
  const double c1 = 0.6, c2 = 0.3;
  const Grid grid(0.0, 1e-4, 20001);
  const auto dyn = LambdaDynamics::from_profiles(RateProfile::constant(c1),
                                                 RateProfile::constant(c2), grid);
  const auto probe = lambda_probe_state(0.4);
  for (double t : {0.5, 1.0, 2.0}) {
    const auto rho = lambda_evolve(dyn, probe, t);
    const double sum = c1 + c2;
    const double aa0 = probe.matrix()(0, 0).real();
    CHECK(rho.matrix()(0, 0).real() ==
          doctest::Approx(aa0 * std::exp(-sum * t)).epsilon(1e-7));
    // Ground-level feed: aa0 * (c_i/sum) * (1 - e^{-sum t}) on top of the
    // initial population.
    const double fed = aa0 * (c1 / sum) * (1.0 - std::exp(-sum * t));
    CHECK(rho.matrix()(1, 1).real() ==
          doctest::Approx(probe.matrix()(1, 1).real() + fed).epsilon(1e-7));
  }
}

TEST_CASE("the ground-ground coherence never moves") {
  std::mt19937 rng(6);
  const Grid grid(0.0, 1e-3, 2001);
  const auto dyn = LambdaDynamics::from_params(detuned(8.0), grid);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rho0 = hss_test::random_state(rng, 3);
    const auto rho = lambda_evolve(dyn, rho0, 0.1 * (trial + 1));
    CHECK(std::abs(rho.matrix()(1, 2) - rho0.matrix()(1, 2)) == 0.0);
  }
}

TEST_CASE("hss and chi closed forms") {
  const Grid grid(0.0, 1e-3, 2001);
  const auto dyn = LambdaDynamics::from_params(resonant(), grid);
  CHECK(lambda_hss_and_chi(dyn, 0.0).hss ==
        doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-12));

  // Nonnegative synthetic rates: never a positive witness.
  const auto markov = LambdaDynamics::from_profiles(
      RateProfile::constant(0.7), RateProfile::cosine_modulated(0.5, 0.4, 2.0),
      grid);
  for (Eigen::Index i = 0; i < grid.n; i += 37) {
    CHECK(lambda_hss_and_chi(markov, grid.time(i)).chi <= 1e-15);
  }

  // Large detuning: chi > 0 exactly where gamma1 + gamma2 < 0.
  const Grid grid4(0.0, 1e-3, 4001);
  const auto dyn8 = LambdaDynamics::from_params(detuned(8.0), grid4);
  for (Eigen::Index i = 0; i < grid4.n; i += 13) {
    const auto hc = lambda_hss_and_chi(dyn8, grid4.time(i));
    const auto r = dyn8.rates_at(grid4.time(i));
    if (std::abs(r.gamma1 + r.gamma2) > 1e-12) {
      CHECK((hc.chi > 0.0) == (r.gamma1 + r.gamma2 < 0.0));
    }
  }
}

TEST_CASE("analytic hss agrees with the finite-difference route over evolve") {
  const Grid grid(0.0, 1e-3, 3001);
  const auto dyn = LambdaDynamics::from_params(detuned(8.0), grid);
  for (double t : {0.0, 0.4, 1.1, 2.3, 2.9}) {
    const double numeric = hss::hss_numeric(
        [&](double ph) { return lambda_evolve(dyn, lambda_probe_state(ph), t); },
        0.9);
    CHECK(std::abs(numeric - lambda_hss_and_chi(dyn, t).hss) < 1e-6);
  }
}

TEST_CASE("trace-distance pair decays with the damping envelope") {
  const Grid grid(0.0, 1e-3, 2001);
  const auto dyn = LambdaDynamics::from_params(detuned(8.0), grid);
  const auto plus = lambda_blp_plus();
  const auto minus = lambda_blp_minus();
  for (double t : {0.0, 0.5, 1.5}) {
    const double numeric = hss::trace_distance(lambda_evolve(dyn, plus, t),
                                               lambda_evolve(dyn, minus, t));
    CHECK(std::abs(numeric - std::exp(-0.5 * dyn.damping_sum_at(t))) < 1e-10);
  }
}
