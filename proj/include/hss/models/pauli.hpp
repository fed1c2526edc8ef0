#pragma once

#include <array>

#include "hss/linalg.hpp"
#include "hss/numerics.hpp"
#include "hss/rate_profile.hpp"

namespace hss::models {

// Qubit under a Pauli channel: rho(t) = sum_i p_i(t) sigma_i rho(0) sigma_i
// with mixture weights built from the cumulative rate integrals
// R_i(t) = int_0^t gamma_i. Basis {|1>, |0>}, excited first; sigma matrices
// are the standard Pauli matrices in that ordering.
struct PauliParams {
  RateProfile gamma1;
  RateProfile gamma2;
  RateProfile gamma3;
};

// The three optimal phase-probe parametrizations. Each one's evolved HSS is
// half of one Bloch-axis decay factor:
//   XPlus0       family (e^{i phi}|0> + |1>)/sqrt(2) at phi = 0
//                -> derivative along sigma_y, hss = lam2/2
//   XPlusHalfPi  family (e^{i phi}|+> + |->)/sqrt(2) at phi = pi/2
//                -> derivative along sigma_z, hss = lam3/2
//   XMinusHalfPi family (e^{i phi}|0> - |1>)/sqrt(2) at phi = pi/2
//                -> derivative along sigma_x, hss = lam1/2
// with lam1 = e^{-2(R2+R3)}, lam2 = e^{-2(R1+R3)}, lam3 = e^{-2(R1+R2)}.
enum class PauliProbe { XPlus0, XPlusHalfPi, XMinusHalfPi };

inline constexpr std::array<PauliProbe, 3> kPauliProbes = {
    PauliProbe::XPlus0, PauliProbe::XPlusHalfPi, PauliProbe::XMinusHalfPi};

/// Bloch-axis decay factors (lam1, lam2, lam3) at time t.
std::array<double, 3> pauli_axis_decays(const PauliParams& p, double t);

/// Mixture weights (p0, p1, p2, p3); they sum to one within 1e-10. Throws
/// NotAProbability when a weight drops below -1e-10 (rates so negative the
/// map left the physical family).
std::array<double, 4> pauli_probabilities(const PauliParams& p, double t);

DensityMatrix pauli_evolve(const PauliParams& p, const DensityMatrix& rho0,
                           double t);

/// Closed-form witness for the given parametrization, e.g.
/// -(gamma1 + gamma3) e^{-2 R1 - 2 R3} for XPlus0.
double pauli_chi(const PauliParams& p, PauliProbe probe, double t);

/// Evolved HSS of the probe family: half the matching axis decay factor.
double pauli_hss(const PauliParams& p, PauliProbe probe, double t);

/// Trace distance of the antipodal pure pair on the probe's Bloch axis;
/// equals the matching axis decay factor, so sigma = d/dt D = 2 chi.
double pauli_trace_distance(const PauliParams& p, PauliProbe probe, double t);

/// The probe family state at phase phi (see PauliProbe mapping above).
DensityMatrix pauli_probe_state(PauliProbe probe, double phi);

// Cumulative rate integrals R_i sampled on a grid; shared by series
// producers.
struct PauliTables {
  Series r1, r2, r3;
};
PauliTables pauli_tables(const PauliParams& p, const Grid& grid);
Series pauli_hss_series(const PauliTables& tables, PauliProbe probe);
Series pauli_distance_series(const PauliTables& tables, PauliProbe probe);
Series pauli_chi_series_closed(const PauliParams& p, const PauliTables& tables,
                               PauliProbe probe);

}  // namespace hss::models
