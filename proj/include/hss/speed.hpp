#pragma once

#include <cmath>
#include <type_traits>

#include "hss/linalg.hpp"

namespace hss {

/// Order of the quantum distance / statistical speed family; must be >= 1.
struct Alpha {
  explicit Alpha(double v) : value(v) {
    if (!(v >= 1.0)) throw std::invalid_argument("Alpha: order must be >= 1");
  }
  double value;
};

/// Quantum distance of order alpha: (1/2 sum_i |lambda_i(rho - sigma)|^alpha)^(1/alpha).
/// Symmetric, in [0, 1] for states.
double quantum_distance(const DensityMatrix& rho, const DensityMatrix& sigma,
                        Alpha alpha);

/// Trace distance: quantum distance at alpha = 1 (same code path).
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Hilbert-Schmidt distance in the convention of the contractivity
/// literature: ||rho - sigma||_2 = sqrt(Tr[(rho-sigma)^2]), a plain
/// Frobenius norm needing no diagonalization. Equals sqrt(2) times
/// quantum_distance at alpha = 2; for qubits it is sqrt(2) times the trace
/// distance, and in any dimension it is bounded by twice the trace
/// distance.
double hilbert_schmidt_distance(const DensityMatrix& rho,
                                const DensityMatrix& sigma);

/// Quantum statistical speed of order alpha evaluated on a Hermitian,
/// traceless derivative d(rho)/d(phi).
double statistical_speed(const Eigen::Ref<const ComplexMatrix>& drho_dphi,
                         Alpha alpha);

/// Hilbert-Schmidt speed from an explicit derivative:
/// sqrt(1/2 sum_ij |entry|^2), a Frobenius-norm evaluation that needs no
/// diagonalization. Input must be Hermitian.
double hss_from_derivative(const Eigen::Ref<const ComplexMatrix>& drho_dphi);

/// Hilbert-Schmidt speed by central finite difference over the phase:
/// hss_from_derivative((rho(phi+d) - rho(phi-d)) / 2d). Requires
/// delta_phi in [tol::kDeltaPhiMin, tol::kDeltaPhiMax].
template <class F>
double hss_numeric(F&& state_at_phi, double phi,
                   double delta_phi = tol::kDeltaPhi) {
  if (!(delta_phi >= tol::kDeltaPhiMin && delta_phi <= tol::kDeltaPhiMax)) {
    throw std::invalid_argument("hss_numeric: delta_phi out of [1e-7, 1e-2]");
  }
  const ComplexMatrix hi = state_at_phi(phi + delta_phi).matrix();
  const ComplexMatrix lo = state_at_phi(phi - delta_phi).matrix();
  return hss_from_derivative((hi - lo) / (2.0 * delta_phi));
}

/// Phase-estimation probe state (e^{i phi}, 1, ..., 1)/sqrt(n) as a density
/// matrix: the canonical phase-sensitive initial state each model evolves.
DensityMatrix phase_probe_state(Eigen::Index dim, double phi);

}  // namespace hss
