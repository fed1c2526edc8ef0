#include <doctest.h>

#include <random>

#include "hss/models/pauli.hpp"
#include "hss/speed.hpp"
#include "support/test_support.hpp"

using hss::ComplexMatrix;
using hss::DensityMatrix;
using hss::RateProfile;
using namespace hss::models;

namespace {

PauliParams constant_rates(double g1, double g2, double g3) {
  return PauliParams{RateProfile::constant(g1), RateProfile::constant(g2),
                     RateProfile::constant(g3)};
}

ComplexMatrix pauli_matrix(int axis) {
  ComplexMatrix m(2, 2);
  if (axis == 0) m << 0, 1, 1, 0;
  if (axis == 1)
    m << hss::Complex(0, 0), hss::Complex(0, -1), hss::Complex(0, 1),
        hss::Complex(0, 0);
  if (axis == 2) m << 1, 0, 0, -1;
  return m;
}

}  // namespace

TEST_CASE("identity channel at t = 0") {
  const auto p = constant_rates(0.4, 0.9, 0.2);
  std::mt19937 rng(8);
  const auto rho0 = hss_test::random_state(rng, 2);
  const auto rho = pauli_evolve(p, rho0, 0.0);
  CHECK((rho.matrix() - rho0.matrix()).cwiseAbs().maxCoeff() < 1e-12);
  const auto probs = pauli_probabilities(p, 0.0);
  CHECK(probs[0] == doctest::Approx(1.0));
}

TEST_CASE("the channel is unital") {
  const auto p = constant_rates(0.7, 0.1, 0.4);
  const auto mixed = DensityMatrix::validated(0.5 * ComplexMatrix::Identity(2, 2));
  for (double t : {0.3, 1.0, 4.0}) {
    const auto rho = pauli_evolve(p, mixed, t);
    CHECK((rho.matrix() - mixed.matrix()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("equal constant rates scale coherences by e^{-4ct}") {
  const double c = 0.3, t = 0.7;
  const auto p = constant_rates(c, c, c);
  std::mt19937 rng(21);
  const auto rho0 = hss_test::random_state(rng, 2);
  const auto rho = pauli_evolve(p, rho0, t);
  CHECK(std::abs(rho.matrix()(0, 1) -
                 rho0.matrix()(0, 1) * std::exp(-4.0 * c * t)) < 1e-10);
}

TEST_CASE("probability normalization over seeded rates") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> amp(0.0, 1.0);
  std::uniform_real_distribution<double> time(0.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = constant_rates(amp(rng), amp(rng), amp(rng));
    const auto probs = pauli_probabilities(p, time(rng));
    CHECK(std::abs(probs[0] + probs[1] + probs[2] + probs[3] - 1.0) < 1e-12);
  }
}

TEST_CASE("strongly negative rates leave the physical family") {
  const auto p = constant_rates(-1.0, -1.0, -1.0);
  CHECK_THROWS_AS(pauli_probabilities(p, 1.0), hss::NotAProbability);
}

TEST_CASE("chi closed forms") {
  const double c = 0.5;
  const auto p = constant_rates(c, c, c);
  for (double t : {0.0, 0.5, 2.0}) {
    CHECK(pauli_chi(p, PauliProbe::XPlus0, t) ==
          doctest::Approx(-2.0 * c * std::exp(-4.0 * c * t)).epsilon(1e-12));
  }

  const PauliParams cosine{RateProfile::constant(0.0),
                           RateProfile::cosine_modulated(0.0, 1.0, 1.0),
                           RateProfile::constant(0.0)};
  for (double t : {0.3, 1.0, 2.5, 4.0}) {
    CHECK(pauli_chi(cosine, PauliProbe::XMinusHalfPi, t) ==
          doctest::Approx(-std::cos(t) * std::exp(-2.0 * std::sin(t)))
              .epsilon(1e-9));
  }

  const auto zero = constant_rates(0.0, 0.0, 0.0);
  for (PauliProbe probe : kPauliProbes) {
    CHECK(pauli_chi(zero, probe, 1.3) == doctest::Approx(0.0));
  }
}

TEST_CASE("probe hss equals the finite-difference route over evolve") {
  // Rates stay nonnegative so the mixture weights stay physical on the
  // whole window.
  const PauliParams p{RateProfile::cosine_modulated(0.3, 0.25, 1.7),
                      RateProfile::constant(0.2),
                      RateProfile::cosine_modulated(0.15, -0.1, 0.9)};
  for (PauliProbe probe : kPauliProbes) {
    const double phi0 = probe == PauliProbe::XPlus0 ? 0.0 : 1.57079632679489661923;
    for (double t : {0.0, 0.8, 2.1}) {
      const double numeric = hss::hss_numeric(
          [&](double ph) {
            return pauli_evolve(p, pauli_probe_state(probe, ph), t);
          },
          phi0);
      CHECK(std::abs(numeric - pauli_hss(p, probe, t)) < 1e-7);
    }
  }
}

TEST_CASE("axis-pair trace distance matches the evolved pair") {
  const PauliParams p{RateProfile::constant(0.15),
                      RateProfile::cosine_modulated(0.2, 0.5, 2.0),
                      RateProfile::constant(0.05)};
  // Probe -> antipodal pure pair on its Bloch axis.
  const auto pair_states = [&](PauliProbe probe) {
    const int axis = probe == PauliProbe::XMinusHalfPi
                         ? 0
                         : (probe == PauliProbe::XPlus0 ? 1 : 2);
    const ComplexMatrix s = pauli_matrix(axis);
    const ComplexMatrix up = 0.5 * (ComplexMatrix::Identity(2, 2) + s);
    const ComplexMatrix dn = 0.5 * (ComplexMatrix::Identity(2, 2) - s);
    return std::pair{DensityMatrix::validated(up), DensityMatrix::validated(dn)};
  };
  for (PauliProbe probe : kPauliProbes) {
    const auto [up, dn] = pair_states(probe);
    for (double t : {0.2, 1.1, 3.3}) {
      const double numeric =
          hss::trace_distance(pauli_evolve(p, up, t), pauli_evolve(p, dn, t));
      CHECK(std::abs(numeric - pauli_trace_distance(p, probe, t)) < 1e-10);
    }
  }
}

TEST_CASE("grid tables agree with the per-point operations") {
  const PauliParams p{RateProfile::cosine_modulated(0.2, 0.6, 1.3),
                      RateProfile::constant(0.4),
                      RateProfile::cosine_modulated(0.0, 0.5, 2.1)};
  const hss::Grid grid(0.0, 1e-2, 301);
  const auto tables = pauli_tables(p, grid);
  for (PauliProbe probe : kPauliProbes) {
    const auto hss_tab = pauli_hss_series(tables, probe);
    const auto chi_tab = pauli_chi_series_closed(p, tables, probe);
    for (Eigen::Index i = 0; i < grid.n; i += 50) {
      CHECK(hss_tab.values(i) ==
            doctest::Approx(pauli_hss(p, probe, grid.time(i))).epsilon(1e-8));
      CHECK(chi_tab.values(i) ==
            doctest::Approx(pauli_chi(p, probe, grid.time(i))).epsilon(1e-8));
    }
  }
}
