#include "hss/models/phase_covariant.hpp"

#include <cmath>

namespace hss::models {

PhaseCovariantParams eternal_profile() {
  return PhaseCovariantParams{RateProfile::constant(1.0),
                              RateProfile::constant(1.0),
                              RateProfile::tanh_eternal(0.5),
                              RateProfile::constant(0.0)};
}

double pc_damping_integral(const PhaseCovariantParams& p, double t) {
  return integrate_adaptive(
      [&](double s) { return 0.5 * (p.gamma1(s) + p.gamma2(s)); }, 0.0, t,
      tol::kQuadTol);
}

double pc_dephasing_integral(const PhaseCovariantParams& p, double t) {
  return integrate_adaptive([&](double s) { return p.gamma3(s); }, 0.0, t,
                            tol::kQuadTol);
}

double pc_phase_integral(const PhaseCovariantParams& p, double t) {
  return integrate_adaptive([&](double s) { return 2.0 * p.omega(s); }, 0.0, t,
                            tol::kQuadTol);
}

double pc_pump_integral(const PhaseCovariantParams& p, double t) {
  // The integrand carries e^{damping(s)}, which can dwarf an absolute
  // tolerance; the result is later multiplied by e^{-damping(t)}, so scaling
  // the quadrature target by the envelope keeps the population accurate to
  // kQuadTol.
  double envelope = 1.0;
  for (double frac : {0.25, 0.5, 0.75, 1.0}) {
    envelope = std::max(envelope, std::exp(pc_damping_integral(p, frac * t)));
  }
  return integrate_adaptive(
      [&](double s) {
        return std::exp(pc_damping_integral(p, s)) * 0.5 * p.gamma2(s);
      },
      0.0, t, tol::kQuadTol * envelope);
}

namespace {

Eigen::Vector2cd initial_family(double phi) {
  const Complex e = std::polar(1.0, phi);
  return Eigen::Vector2cd(0.5 * (e - 1.0), 0.5 * (e + 1.0));
}

}  // namespace

DensityMatrix phase_covariant_evolve(const PhaseCovariantParams& p, double phi,
                                     double t) {
  const Eigen::Vector2cd psi = initial_family(phi);
  const double p1_0 = std::norm(psi(0));
  const Complex alpha0 = psi(0) * std::conj(psi(1));

  const double damping = pc_damping_integral(p, t);
  const double dephasing = pc_dephasing_integral(p, t);
  const double phase = pc_phase_integral(p, t);
  const double pump = pc_pump_integral(p, t);

  const double p1 = std::exp(-damping) * (pump + p1_0);
  const Complex q = alpha0 * std::exp(Complex(-0.5 * damping - dephasing, phase));

  ComplexMatrix rho(2, 2);
  rho << Complex(p1, 0.0), q, std::conj(q), Complex(1.0 - p1, 0.0);
  return DensityMatrix::validated(rho, tol::kModelState);
}

double phase_covariant_hss(const PhaseCovariantParams& p, double phi, double t) {
  const double damping = pc_damping_integral(p, t);
  const double dephasing = pc_dephasing_integral(p, t);
  const double s2 = std::sin(phi) * std::sin(phi);
  const double c2 = std::cos(phi) * std::cos(phi);
  return 0.5 * std::sqrt(std::exp(-2.0 * damping) * s2 +
                         std::exp(-damping - 2.0 * dephasing) * c2);
}

double phase_covariant_chi(const PhaseCovariantParams& p, double phi, double t) {
  const double damping = pc_damping_integral(p, t);
  const double dephasing = pc_dephasing_integral(p, t);
  const double g1 = p.gamma1(t), g2 = p.gamma2(t), g3 = p.gamma3(t);
  const double s2 = std::sin(phi) * std::sin(phi);
  const double c2 = std::cos(phi) * std::cos(phi);
  const double root = std::sqrt(std::exp(damping - 2.0 * dephasing) * c2 + s2);
  return -0.125 * std::exp(-2.0 * dephasing) * (g1 + g2 + 4.0 * g3) * c2 / root -
         0.25 * std::exp(-damping) * (g1 + g2) * s2 / root;
}

PhaseCovariantTables phase_covariant_tables(const PhaseCovariantParams& p,
                                            const Grid& grid) {
  Series damping = cumulative_adaptive(
      [&](double s) { return 0.5 * (p.gamma1(s) + p.gamma2(s)); }, grid);
  Series dephasing =
      cumulative_adaptive([&](double s) { return p.gamma3(s); }, grid);
  return PhaseCovariantTables{std::move(damping), std::move(dephasing)};
}

Series phase_covariant_hss_series(const PhaseCovariantTables& tables,
                                  double phi) {
  const double s2 = std::sin(phi) * std::sin(phi);
  const double c2 = std::cos(phi) * std::cos(phi);
  Eigen::ArrayXd out =
      0.5 * (((-2.0 * tables.damping.values).exp() * s2) +
             ((-tables.damping.values - 2.0 * tables.dephasing.values).exp() * c2))
                .sqrt();
  return Series(tables.damping.grid, std::move(out));
}

Series phase_covariant_distance_series(const PhaseCovariantTables& tables,
                                       double phi) {
  const double s2 = std::sin(phi) * std::sin(phi);
  const double c2 = std::cos(phi) * std::cos(phi);
  Eigen::ArrayXd out =
      c2 >= s2
          ? (-0.5 * tables.damping.values - tables.dephasing.values).exp().eval()
          : (-tables.damping.values).exp().eval();
  return Series(tables.damping.grid, std::move(out));
}

}  // namespace hss::models
