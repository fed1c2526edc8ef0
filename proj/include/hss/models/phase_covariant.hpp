#pragma once

#include "hss/linalg.hpp"
#include "hss/numerics.hpp"
#include "hss/rate_profile.hpp"

namespace hss::models {

// Single qubit under phase-covariant noise: three dissipators with rates
// gamma1(t), gamma2(t), gamma3(t) (the last is pure dephasing) plus a
// frequency shift omega(t).
//
// Basis convention: {|1>, |0>}, excited state first. The evolved state is
//   [[P1(t), Q(t)], [conj(Q(t)), 1 - P1(t)]]
// with P1 the excited-state population. The phase-encoded initial family is
// (e^{i phi}|+> + |->)/sqrt(2), |+-> = (|0> +- |1>)/sqrt(2), which in this
// basis reads ((e^{i phi} - 1)/2, (e^{i phi} + 1)/2).
struct PhaseCovariantParams {
  RateProfile gamma1;
  RateProfile gamma2;
  RateProfile gamma3;
  RateProfile omega = RateProfile::constant(0.0);
};

/// Built-in eternal-non-Markovianity profile: gamma1 = gamma2 = 1,
/// gamma3 = -tanh(t)/2. Every pairwise rate combination stays nonnegative,
/// so the witness stays nonpositive despite the always-negative dephasing
/// rate.
PhaseCovariantParams eternal_profile();

/// Integrals entering the propagator, each from 0 to t by adaptive
/// quadrature: damping (gamma1+gamma2)/2, dephasing gamma3, phase 2*omega,
/// and the population pump (exp(damping(s)) * gamma2(s)/2, which reuses the
/// damping evaluator for its inner exponent).
double pc_damping_integral(const PhaseCovariantParams& p, double t);
double pc_dephasing_integral(const PhaseCovariantParams& p, double t);
double pc_phase_integral(const PhaseCovariantParams& p, double t);
double pc_pump_integral(const PhaseCovariantParams& p, double t);

DensityMatrix phase_covariant_evolve(const PhaseCovariantParams& p, double phi,
                                     double t);

/// Closed-form witness chi(t) = d/dt HSS for the phase family above.
double phase_covariant_chi(const PhaseCovariantParams& p, double phi, double t);

/// Closed-form HSS of the evolved phase family:
/// (1/2) sqrt(e^{-2*damping} sin^2(phi) + e^{-damping - 2*dephasing} cos^2(phi)).
double phase_covariant_hss(const PhaseCovariantParams& p, double phi, double t);

// Grid-sampled damping/dephasing integrals shared by the series producers.
struct PhaseCovariantTables {
  Series damping;
  Series dephasing;
};
PhaseCovariantTables phase_covariant_tables(const PhaseCovariantParams& p,
                                            const Grid& grid);

Series phase_covariant_hss_series(const PhaseCovariantTables& tables, double phi);

/// Distinguishability decay for the canonical orthogonal pair matched to
/// phi: the equatorial pair (|+>, |->) when cos^2(phi) >= sin^2(phi)
/// (decay e^{-damping/2 - dephasing}), the pole pair (|1>, |0>) otherwise
/// (decay e^{-damping}). Each pair's trace-distance derivative changes sign
/// exactly with the matching chi condition.
Series phase_covariant_distance_series(const PhaseCovariantTables& tables,
                                       double phi);

}  // namespace hss::models
