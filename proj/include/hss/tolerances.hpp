#pragma once

// Numerical tolerances shared by the library and its test suites. All bounds
// live here so the two always agree.

namespace hss::tol {

// DensityMatrix invariants (strict gate used when validating exact
// constructions).
inline constexpr double kHermiticity = 1e-12;
inline constexpr double kUnitTrace = 1e-10;
inline constexpr double kPositivity = 1e-10;

// Evolved model outputs are validated against this looser uniform bound;
// quadrature error accumulates in the propagators.
inline constexpr double kModelState = 1e-8;

// Inputs gated as Hermitian are rejected when the entrywise asymmetry
// exceeds this.
inline constexpr double kHermReject = 1e-8;

// Hermitian eigensolver: reconstruction / orthonormality bound and cyclic
// sweep budget.
inline constexpr double kEigReconstruct = 1e-10;
inline constexpr int kJacobiMaxSweeps = 100;

// Adaptive quadrature defaults.
inline constexpr double kQuadTol = 1e-10;
inline constexpr int kQuadMaxDepth = 40;
// Per-step tolerance when accumulating an integral incrementally along a
// uniform grid.
inline constexpr double kQuadStepTol = 1e-12;

// Finite-difference step over the encoded phase.
inline constexpr double kDeltaPhi = 1e-4;
inline constexpr double kDeltaPhiMin = 1e-7;
inline constexpr double kDeltaPhiMax = 1e-2;

// Witness defaults: sign-comparison floor (central-difference noise at
// dt = 1e-3) and the phase-grid size for the measure maximization.
inline constexpr double kWitness = 1e-8;
inline constexpr int kPhiGrid = 64;
inline constexpr double kDefaultDt = 1e-3;

}  // namespace hss::tol
