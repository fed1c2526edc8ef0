#pragma once

#include "hss/linalg.hpp"
#include "hss/numerics.hpp"

namespace hss::models {

// Two independent qubits, each in its own leaky cavity with a Lorentzian
// mode profile of width lambda; gamma0 is the qubit relaxation rate.
// Memory effects arise in the strong coupling regime gamma0 > lambda/2.
//
// Basis convention: {|11>, |10>, |01>, |00>}, first qubit major, excited
// level first within each qubit.
struct TwoQubitParams {
  double gamma0;
  double lambda;
  bool strong_coupling() const { return gamma0 > 0.5 * lambda; }
};

/// Coherence characteristic function P(t) in [0, 1]. Trigonometric branch
/// for lambda < 2*gamma0, hyperbolic for lambda > 2*gamma0 (one complex
/// expression covers both), dedicated limit form
/// e^{-lambda t} (1 + lambda t / 2)^2 at the degeneracy.
double two_qubit_P(const TwoQubitParams& p, double t);

/// Applies the per-element product rule of the two local channels.
///
/// Derivation note: the local channel has Kraus operators
/// K1 = [[sqrt(P), 0], [0, 1]], K2 = [[0, 0], [sqrt(1-P), 0]] in {|1>,|0>},
/// and the pair map is (Ki x Kj). Element-wise, populations mix P and
/// P(1-P) feed-down terms, coherences pick up factors sqrt(P) per qubit
/// whose excitation number changes, and <10| rho |00>-type elements absorb
/// sqrt(P)(1-P) feed-down from <11| rho |01>. The lower triangle follows by
/// conjugation.
DensityMatrix two_qubit_evolve(const TwoQubitParams& p,
                               const DensityMatrix& rho0, double t);

/// HSS and BLP trace distance as functions of the coherence function:
///   hss(P) = (1/4) sqrt(P (P (4P - 3) + 2))
///   D(P)   = sqrt(P (2 - 2P + P^2))
/// Both are strictly increasing in P on (0, 1].
double two_qubit_hss_of_coherence(double P);
double two_qubit_distance_of_coherence(double P);

struct HssAndDistance {
  double hss;
  double trace_distance;
};

/// Closed forms evaluated at P(t). The HSS is phase-independent; the trace
/// distance is for the pair |++><++| vs |--><--| with
/// |+-> = (|0> +- |1>)/sqrt(2).
HssAndDistance two_qubit_hss_and_D(const TwoQubitParams& p, double t);

/// Phase-probe family (e^{i phi}|11> + |10> + |01> + |00>)/2.
DensityMatrix two_qubit_probe_state(double phi);

DensityMatrix two_qubit_blp_plus();
DensityMatrix two_qubit_blp_minus();

Series two_qubit_P_series(const TwoQubitParams& p, const Grid& grid);
Series two_qubit_hss_series(const TwoQubitParams& p, const Grid& grid);
Series two_qubit_distance_series(const TwoQubitParams& p, const Grid& grid);

}  // namespace hss::models
