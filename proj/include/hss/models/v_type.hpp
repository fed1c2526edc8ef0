#pragma once

#include <array>

#include "hss/linalg.hpp"
#include "hss/numerics.hpp"

namespace hss::models {

// V-type three-level atom in a dissipative cavity: two upper levels decay
// to the ground state through channels whose interference is set by the
// dipole alignment theta in [-1, 1] (0: no interference, +-1: strongest).
// gamma is the upper-level relaxation rate, lambda the reservoir spectral
// width; the dynamics is oscillatory (strong coupling) once either channel
// has lambda < 2*gamma*(1 +- |theta|).
//
// Basis convention: the transformed frame in which the Kraus operators are
// diagonal-plus-feed: e1 = |+>-like upper level (amplitude g_plus),
// e2 = |->-like upper level (amplitude g_minus), e3 = ground.
struct VTypeParams {
  VTypeParams(double gamma_, double lambda_, double theta_)
      : gamma(gamma_), lambda(lambda_), theta(theta_) {
    if (!(gamma > 0.0)) throw std::invalid_argument("v_type: gamma must be > 0");
    if (!(lambda > 0.0)) throw std::invalid_argument("v_type: lambda must be > 0");
    if (!(theta >= -1.0 && theta <= 1.0)) {
      throw std::invalid_argument("v_type: theta must be in [-1, 1]");
    }
  }
  double gamma;
  double lambda;
  double theta;
};

struct GPair {
  Complex g_plus;
  Complex g_minus;
};

/// Channel amplitudes g_+-(t) = e^{-lambda t/2} [cosh(d t/2)
/// + (lambda/d) sinh(d t/2)] with d = sqrt(lambda^2
/// - 2 lambda gamma (1 +- |theta|)), evaluated in complex arithmetic (d may
/// be imaginary); limit e^{-lambda t/2}(1 + lambda t/2) as d -> 0. Values
/// are real for all valid parameters.
GPair vtype_G(const VTypeParams& p, double t);

/// Kraus set for given amplitudes: K1 = diag(gp, gm, 1), K2 feeds
/// sqrt(1-|gp|^2) of e1 into the ground level, K3 likewise for e2. Throws
/// NonContractiveAmplitude when |gp| or |gm| exceeds 1 + 1e-10.
std::array<ComplexMatrix, 3> vtype_kraus(Complex gp, Complex gm);

DensityMatrix vtype_evolve(const VTypeParams& p, const DensityMatrix& rho0,
                           double t);

struct HssAndDistance3 {
  double hss;
  double trace_distance;
};

/// Closed forms: hss = (1/3)|g_+| sqrt(|g_-|^2 + 1) (phase-independent) and
/// the BLP trace distance D = |g_+| for the pair (e1 +- e3)/sqrt(2).
HssAndDistance3 vtype_hss_and_D(const VTypeParams& p, double t);

/// Phase-probe family (e^{i phi}, 1, 1)/sqrt(3) in the transformed basis.
DensityMatrix vtype_probe_state(double phi);

DensityMatrix vtype_blp_plus();
DensityMatrix vtype_blp_minus();

Series vtype_hss_series(const VTypeParams& p, const Grid& grid);
Series vtype_distance_series(const VTypeParams& p, const Grid& grid);
Series vtype_abs_g_series(const VTypeParams& p, const Grid& grid, bool plus);

}  // namespace hss::models
